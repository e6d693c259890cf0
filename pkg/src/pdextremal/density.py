"""Packing/covering/tiling predicates and asymptotic uniform upper density.

Densities are implemented only where they have a closed form: on a
probability-normalized finite group the a.u.u.d. of a finite set is its
cardinality, and for a periodic integer set it is residues/period (for
periodic sets the lim-sup and inf-sup definitions coincide: every window of
length r*p contains exactly r*#residues points, so the sup over windows and
the limit agree).  The exhaustive search certifies the optimum over periodic
patterns up to the stated period bound only, and reports that bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .groups import Group, SymSet, _as_indices, difference_mask


@dataclass(frozen=True)
class PeriodicSet:
    """residues + period * Z, a periodic subset of the integers."""

    period: int
    residues: frozenset[int]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        object.__setattr__(self, "residues", frozenset(int(r) % self.period for r in self.residues))

    def density(self) -> Fraction:
        return Fraction(len(self.residues), self.period)

    def to_json(self) -> dict:
        return {"period": self.period, "residues": sorted(self.residues)}


def shift_counts(group: Group, h, lam) -> np.ndarray:
    """counts[x] = number of translates H + l (l in Lambda) covering x."""
    hi = _as_indices(group, h)
    li = _as_indices(group, lam)
    counts = np.zeros(group.size, dtype=np.int64)
    for l in li:
        np.add.at(counts, group.add_index(hi, int(l)), 1)
    return counts


def packs_strict(group: Group, h, lam) -> bool:
    """(Lambda - Lambda) intersect (H - H) == {0}."""
    dl = difference_mask(group, lam, lam)
    dh = difference_mask(group, h, h)
    both = dl & dh
    both[0] = False
    return not both.any()


def covers(group: Group, h, lam) -> bool:
    return bool(np.all(shift_counts(group, h, lam) >= 1))


def tiles_strict(group: Group, h, lam) -> bool:
    return packs_strict(group, h, lam) and covers(group, h, lam)


def packing_type(w, lam, group: Group | None = None) -> bool:
    """Generalized condition (Lambda - Lambda) intersect W subset of {0}."""
    if group is None:
        if not isinstance(w, SymSet):
            raise ValueError("group must be given when W is not a SymSet")
        group = w.group
    wmask = w.mask if isinstance(w, SymSet) else np.asarray(w, dtype=bool)
    dl = difference_mask(group, lam, lam)
    both = dl & wmask
    both[0] = False
    return not both.any()


def auud_finite(group: Group, lam) -> int:
    """#Lambda, valid on a probability-normalized group."""
    if abs(group.total_mass - 1.0) > 1e-12:
        raise ValueError("asymptotic density on a finite group needs m_G(G) = 1")
    return int(len(_as_indices(group, lam)))


def auud_periodic(lam: PeriodicSet) -> Fraction:
    return lam.density()


def integer_shadow(intervals: Sequence[Sequence[float]], closed: bool = False) -> list[int]:
    """Positive integers inside a union of rational intervals (open by default).

    The helper that turns a real forbidden-difference set into the integer
    forbidden set used by the periodic search.
    """
    out = set()
    for pair in intervals:
        if len(pair) != 2:
            raise ValueError(f"interval must be a [lo, hi] pair, got {pair!r}")
        lo, hi = float(pair[0]), float(pair[1])
        if lo > hi:
            raise ValueError(f"interval endpoints out of order: {pair!r}")
        k = int(np.floor(lo)) - 1
        while k <= int(np.ceil(hi)) + 1:
            inside = (lo <= k <= hi) if closed else (lo < k < hi)
            if inside and abs(k) > 0:
                out.add(abs(k))
            k += 1
    return sorted(out)


def _max_independent_set(p: int, forbidden_residues: set[int]) -> list[int]:
    """Largest S in Z_p with (S - S) mod p avoiding the forbidden residues.

    Branch and bound over residues in increasing order; among maximum sets the
    lexicographically smallest is returned (ties resolved by preferring to
    include the smallest available residue first).
    """
    conflict = [0] * p  # bitmask of residues conflicting with r
    for r in range(p):
        m = 0
        for f in forbidden_residues:
            m |= 1 << ((r + f) % p)
            m |= 1 << ((r - f) % p)
        conflict[r] = m

    best: list[int] = []

    def extend(start: int, chosen: list[int], banned: int):
        nonlocal best
        if len(chosen) + (p - start) <= len(best):
            return
        if start == p:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if not (banned >> start) & 1:
            chosen.append(start)
            extend(start + 1, chosen, banned | conflict[start])
            chosen.pop()
        extend(start + 1, chosen, banned)

    extend(0, [], 0)
    return best


def max_density_search(forbidden_diffs: Iterable[int], max_period: int) -> dict:
    """Best periodic-set density whose integer differences avoid the forbidden set.

    Searches all periods up to max_period exhaustively; the reported optimum is
    certified for periodic patterns within that bound only.
    """
    forbidden = sorted({int(f) for f in forbidden_diffs})
    if any(f <= 0 for f in forbidden):
        raise ValueError("forbidden differences must be positive integers")
    if max_period < 1 or max_period > 24:
        raise ValueError("max_period must be between 1 and 24 (exhaustive search bound)")
    if not forbidden:
        return {"density": Fraction(1), "witness": PeriodicSet(1, frozenset([0])),
                "search_bound": max_period}

    best_density = Fraction(0)
    best_witness = PeriodicSet(1, frozenset())
    for p in range(1, max_period + 1):
        residues = {f % p for f in forbidden}
        if 0 in residues:
            continue  # some forbidden difference is a multiple of p
        witness = _max_independent_set(p, residues)
        dens = Fraction(len(witness), p)
        if dens > best_density:
            best_density = dens
            best_witness = PeriodicSet(p, frozenset(witness))
    return {"density": best_density, "witness": best_witness, "search_bound": max_period}


def density_bounds_check(group: Group, h, lam) -> dict:
    """Compare the a.u.u.d. of Lambda with 1/m_G(H) per the packing/covering facts."""
    if abs(group.total_mass - 1.0) > 1e-12:
        raise ValueError("density bounds are stated for a probability-normalized group")
    hi = _as_indices(group, h)
    mass = len(hi) * group.weight
    dens = auud_finite(group, lam)
    is_pack = packs_strict(group, h, lam)
    is_cover = covers(group, h, lam)
    report = {
        "auud": dens,
        "inv_mass": (1.0 / mass) if mass > 0 else float("inf"),
        "packs_strict": is_pack,
        "covers": is_cover,
        "tiles_strict": is_pack and is_cover,
        "checks": [],
    }
    ok = True
    if is_pack and mass > 0:
        good = dens <= report["inv_mass"] + 1e-9
        report["checks"].append({"relation": "auud <= 1/m_G(H)", "pass": good})
        ok &= good
    if is_cover and mass > 0:
        good = dens >= report["inv_mass"] - 1e-9
        report["checks"].append({"relation": "auud >= 1/m_G(H)", "pass": good})
        ok &= good
    if is_pack and is_cover and mass > 0:
        good = abs(dens - report["inv_mass"]) <= 1e-9
        report["checks"].append({"relation": "auud == 1/m_G(H)", "pass": good})
        ok &= good
    report["pass"] = bool(ok)
    return report
