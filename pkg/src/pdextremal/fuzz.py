"""Randomized verification suites over a documented, replayable PRNG.

The generator is SplitMix64 (Steele, Lea and Flood, "Fast splittable
pseudorandom number generators", OOPSLA 2014): 64-bit state advanced by the
additive constant 0x9E3779B97F4A7C15, output mixed by xor-shifts with
multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.  Bounded draws use
integer scaling (next * n) >> 64.  This pins every fuzz case to its seed in a
way that can be reproduced from the algorithm description alone.
"""

from __future__ import annotations

import numpy as np

from .density import density_bounds_check, packs_strict, shift_counts
from .extremal import (
    delsarte,
    largest_packing_witness,
    turan,
    two_set_constant,
    verify_automorphism_invariance,
    verify_homomorphism_bound,
    verify_main_theorem,
    verify_product_bound,
    verify_tile_theorem,
)
from .groups import Group, SymSet, difference_mask, make_group

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform draw from {0, ..., n-1}."""
        return (self.next_u64() * n) >> 64

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def pick(self, items):
        return items[self.below(len(items))]


def symmetric_mask(rng: SplitMix64, group: Group, include_zero: bool,
                   keep_per_orbit: tuple[int, int] = (1, 2)) -> np.ndarray:
    """Random 0-symmetric mask; each {x, -x} orbit kept with probability num/den."""
    mask = np.zeros(group.size, dtype=bool)
    num, den = keep_per_orbit
    for x in range(group.size):
        if x > group.neg[x]:
            continue
        if x == 0:
            mask[0] = include_zero
            continue
        if rng.chance(num, den):
            mask[x] = True
            mask[group.neg[x]] = True
    return mask


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _set_json(group: Group, mask: np.ndarray) -> list:
    return SymSet(group, mask.copy()).elements()


def tile_instance(rng: SplitMix64, max_n: int) -> dict:
    n = 2 + rng.below(max_n - 1)
    k = rng.pick(_divisors(n))
    group = make_group([n], "probability")
    h = list(range(k))
    lam = list(range(0, n, k))
    kind = rng.below(3)
    if kind == 0:
        omega_minus = SymSet.empty(group)
    elif kind == 1:
        omega_minus = SymSet.full(group)
    else:
        omega_minus = SymSet(group, symmetric_mask(rng, group, include_zero=True))
    return {"group": group, "h": h, "lam": lam, "omega_minus": omega_minus,
            "desc": {"n": n, "k": k, "omega_minus": omega_minus.elements()}}


def run_tile_suite(count: int, seed: int, max_n: int = 40) -> dict:
    rng = SplitMix64(seed)
    instances = []
    failures = 0
    for i in range(count):
        inst = tile_instance(rng, max_n)
        rep = verify_tile_theorem(inst["group"], inst["h"], inst["lam"], inst["omega_minus"])
        ok = rep["pass"]
        failures += not ok
        instances.append({"index": i, **inst["desc"], "lhs": rep["lhs"], "rhs": rep["rhs"],
                          "pass": ok})
    return {"suite": "tile", "count": count, "seed": seed, "max_n": max_n,
            "failures": failures, "pass": failures == 0, "instances": instances}


def main_instance(rng: SplitMix64, max_n: int) -> dict:
    n = 4 + rng.below(max_n - 3)
    group = make_group([n], "probability")
    if rng.chance(3, 10):
        # strict-tile construction: tight case D = k/n = 1/#Lambda
        k = rng.pick([d for d in _divisors(n) if d >= 1])
        lam = list(range(0, n, k))
        mask = np.zeros(n, dtype=bool)
        for j in range(-(k - 1), k):
            mask[j % n] = True
        omega_plus = SymSet(group, mask)
    else:
        lam_size = 2 + rng.below(max(1, n // 3))
        lam = [0]
        pool = list(range(1, n))
        while len(lam) < lam_size and pool:
            lam.append(pool.pop(rng.below(len(pool))))
        lam = sorted(lam)
        dl = difference_mask(group, lam, lam)
        mask = np.zeros(n, dtype=bool)
        mask[0] = True
        for x in range(1, n):
            if x <= group.neg[x] and not dl[x] and not dl[group.neg[x]] and rng.chance(1, 2):
                mask[x] = True
                mask[group.neg[x]] = True
        omega_plus = SymSet(group, mask)
    return {"group": group, "omega_plus": omega_plus, "lam": lam,
            "desc": {"n": n, "omega_plus": omega_plus.elements(), "lam": lam}}


def run_main_suite(count: int, seed: int, max_n: int = 40) -> dict:
    rng = SplitMix64(seed)
    instances = []
    failures = 0
    tight = 0
    for i in range(count):
        inst = main_instance(rng, max_n)
        rep = verify_main_theorem(inst["group"], inst["omega_plus"], inst["lam"])
        failures += not rep["pass"]
        tight += rep["tight"]
        instances.append({"index": i, **inst["desc"], "delsarte": rep["delsarte"],
                          "bound": rep["bound"], "pass": rep["pass"], "tight": rep["tight"]})
    return {"suite": "main", "count": count, "seed": seed, "max_n": max_n,
            "failures": failures, "tight_instances": tight,
            "pass": failures == 0 and tight >= 1, "instances": instances}


def hom_instance(rng: SplitMix64, max_n: int) -> dict:
    composites = [n for n in range(4, max_n + 1)
                  if any(n % d == 0 for d in range(2, n)) and n <= max_n]
    n = rng.pick(composites)
    d = rng.pick([d for d in _divisors(n) if 1 < d < n])
    group = make_group([n], "counting")
    k_elems = list(range(0, n, d))  # subgroup d*Z_n of size n/d
    omega_plus = SymSet(group, symmetric_mask(rng, group, include_zero=True))
    omega_minus = (SymSet.full(group) if rng.chance(1, 3)
                   else SymSet(group, symmetric_mask(rng, group, include_zero=rng.chance(1, 2))))
    return {"group": group, "k": k_elems, "omega_plus": omega_plus, "omega_minus": omega_minus,
            "desc": {"n": n, "k": k_elems, "omega_plus": omega_plus.elements(),
                     "omega_minus": omega_minus.elements()}}


def run_hom_suite(count: int, seed: int, max_n: int = 24) -> dict:
    rng = SplitMix64(seed)
    instances = []
    failures = 0
    for i in range(count):
        inst = hom_instance(rng, max_n)
        rep = verify_homomorphism_bound(inst["group"], inst["k"], inst["omega_plus"],
                                        inst["omega_minus"])
        failures += not rep["pass"]
        instances.append({"index": i, **inst["desc"], "lhs": rep["lhs"], "rhs": rep["rhs"],
                          "pass": rep["pass"]})
    return {"suite": "hom", "count": count, "seed": seed, "max_n": max_n,
            "failures": failures, "pass": failures == 0, "instances": instances}


def run_product_suite(count: int, seed: int, max_n: int = 7) -> dict:
    rng = SplitMix64(seed)
    instances = []
    failures = 0
    for i in range(count):
        n1 = 2 + rng.below(max_n - 1)
        n2 = 2 + rng.below(max_n - 1)
        g1 = make_group([n1], "probability")
        g2 = make_group([n2], "probability")
        o1p = SymSet(g1, symmetric_mask(rng, g1, include_zero=True))
        o2p = SymSet(g2, symmetric_mask(rng, g2, include_zero=True))
        o1m = SymSet(g1, symmetric_mask(rng, g1, include_zero=rng.chance(1, 2)))
        o2m = SymSet(g2, symmetric_mask(rng, g2, include_zero=rng.chance(1, 2)))
        rep = verify_product_bound(g1, g2, (o1p, o2p), (o1m, o2m))
        failures += not rep["pass"]
        instances.append({"index": i, "n1": n1, "n2": n2, "lhs": rep["lhs"],
                          "rhs": rep["rhs"], "pass": rep["pass"]})
    return {"suite": "product", "count": count, "seed": seed, "max_n": max_n,
            "failures": failures, "pass": failures == 0, "instances": instances}


def run_auto_suite(count: int, seed: int, max_n: int = 30) -> dict:
    rng = SplitMix64(seed)
    instances = []
    failures = 0
    for i in range(count):
        n = 3 + rng.below(max_n - 2)
        group = make_group([n], "probability")
        units = [u for u in range(1, n) if np.gcd(u, n) == 1]
        u = rng.pick(units)
        op = SymSet(group, symmetric_mask(rng, group, include_zero=True))
        om = SymSet(group, symmetric_mask(rng, group, include_zero=rng.chance(1, 2)))
        rep = verify_automorphism_invariance(group, u, op, om)
        failures += not rep["pass"]
        instances.append({"index": i, "n": n, "unit": u, "value": rep["value"],
                          "mapped_value": rep["mapped_value"], "pass": rep["pass"]})
    return {"suite": "auto", "count": count, "seed": seed, "max_n": max_n,
            "failures": failures, "pass": failures == 0, "instances": instances}


def run_density_suite(count: int, seed: int, max_n: int = 40) -> dict:
    rng = SplitMix64(seed)
    instances = []
    failures = 0
    for i in range(count):
        n = 2 + rng.below(max_n - 1)
        group = make_group([n], "probability")
        h_size = 1 + rng.below(max(1, n // 2))
        h = sorted({rng.below(n) for _ in range(h_size)} | {0})
        lam_size = 1 + rng.below(max(1, n // 2))
        lam = sorted({rng.below(n) for _ in range(lam_size)})
        rep = density_bounds_check(group, h, lam)
        # strict packing is equivalent to all cover counts <= 1
        counts_ok = (packs_strict(group, h, lam)
                     == bool(np.max(shift_counts(group, h, lam), initial=0) <= 1))
        ok = rep["pass"] and counts_ok
        failures += not ok
        instances.append({"index": i, "n": n, "h": h, "lam": lam, "pass": ok,
                          "auud": rep["auud"], "packs_strict": rep["packs_strict"],
                          "covers": rep["covers"]})
    return {"suite": "density", "count": count, "seed": seed, "max_n": max_n,
            "failures": failures, "pass": failures == 0, "instances": instances}


def run_ineq_suite(count: int, seed: int, max_n: int = 20) -> dict:
    """Monotonicity, T <= D, value <= m_G(Omega+), autocorrelation lower bound."""
    rng = SplitMix64(seed)
    instances = []
    failures = 0
    for i in range(count):
        n = 2 + rng.below(max_n - 1)
        group = make_group([n], "probability")
        op = SymSet(group, symmetric_mask(rng, group, include_zero=True))
        om = SymSet(group, symmetric_mask(rng, group, include_zero=rng.chance(1, 2)))
        # supersets for monotonicity
        op_big = SymSet(group, op.mask | symmetric_mask(rng, group, include_zero=True))
        om_big = SymSet(group, om.mask | symmetric_mask(rng, group, include_zero=False))

        value = two_set_constant(group, op, om).value
        value_big = two_set_constant(group, op_big, om_big).value
        t = turan(group, op).value
        d = delsarte(group, op).value
        witness = largest_packing_witness(group, op)
        lower = len(witness) * group.weight

        checks = {
            "monotone": value <= value_big + 1e-9,
            "turan_le_delsarte": t <= d + 1e-9,
            "upper_by_mass": value <= op.haar_mass() + 1e-9,
            "autocorr_lower": value >= lower - 1e-9,
        }
        ok = all(checks.values())
        failures += not ok
        instances.append({"index": i, "n": n, "omega_plus": op.elements(),
                          "value": value, "checks": checks, "pass": ok})
    return {"suite": "ineq", "count": count, "seed": seed, "max_n": max_n,
            "failures": failures, "pass": failures == 0, "instances": instances}


SUITES = {
    "tile": run_tile_suite,
    "main": run_main_suite,
    "hom": run_hom_suite,
    "product": run_product_suite,
    "auto": run_auto_suite,
    "density": run_density_suite,
    "ineq": run_ineq_suite,
}
