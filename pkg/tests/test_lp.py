import numpy as np
import pytest
from scipy.optimize import linprog

from pdextremal.lp import LpProblem, solve


def box(c, a, b, senses, lower=None, upper=None):
    return LpProblem(np.asarray(c, float), np.asarray(a, float), np.asarray(b, float),
                     senses, lower, upper)


def test_box_maximum():
    p = box([1, 1], [[1, 0], [0, 1]], [1, 1], ["<=", "<="])
    sol = solve(p)
    assert sol.status == "optimal"
    assert sol.objective_value == pytest.approx(2.0, abs=1e-9)
    assert np.allclose(sol.x, [1, 1], atol=1e-9)


def test_infeasible_bounds():
    p = box([1], [[1]], [-1], ["<="])  # x <= -1, x >= 0
    assert solve(p).status == "infeasible"


def test_unbounded_ray():
    p = box([1], np.zeros((0, 1)), np.zeros(0), [])
    assert solve(p).status == "unbounded"


def test_equality_and_free_variables():
    # maximize x - y subject to x + y = 3, x <= 2, y free
    p = box([1, -1], [[1, 1], [1, 0]], [3, 2], ["=", "<="],
            lower=[0, -np.inf], upper=[np.inf, np.inf])
    sol = solve(p)
    assert sol.status == "optimal"
    assert sol.objective_value == pytest.approx(1.0, abs=1e-9)
    assert np.allclose(sol.x, [2, 1], atol=1e-9)


def test_ge_rows_and_two_sided_bounds():
    # maximize -x subject to x >= 2, 0 <= x <= 5
    p = box([-1], [[1]], [2], [">="], lower=[0], upper=[5])
    sol = solve(p)
    assert sol.objective_value == pytest.approx(-2.0, abs=1e-9)


def test_dual_certificate_simple():
    p = box([1], [[1]], [1], ["<="])
    sol = solve(p)
    assert sol.dual is not None
    assert sol.dual[0] == pytest.approx(1.0, abs=1e-9)
    assert abs(sol.objective_value - sol.dual_objective) <= 1e-8


def test_determinism_same_bytes():
    rng = np.random.default_rng(4)
    a = rng.normal(size=(6, 4))
    b = rng.uniform(1, 3, size=6)
    c = rng.normal(size=4)
    p1 = box(c, a, b, ["<="] * 6, upper=[10] * 4)
    p2 = box(c.copy(), a.copy(), b.copy(), ["<="] * 6, upper=[10] * 4)
    s1, s2 = solve(p1), solve(p2)
    assert s1.x.tobytes() == s2.x.tobytes()
    assert s1.objective_value == s2.objective_value


def _random_instance(rng):
    n = int(rng.integers(2, 7))
    m = int(rng.integers(1, 8))
    a = rng.normal(size=(m, n))
    senses = [rng.choice(["<=", ">=", "="]) for _ in range(m)]
    x0 = rng.uniform(0, 2, size=n)  # feasible anchor
    slack = rng.uniform(0, 1, size=m)
    b = a @ x0
    for i, s in enumerate(senses):
        if s == "<=":
            b[i] += slack[i]
        elif s == ">=":
            b[i] -= slack[i]
    c = rng.normal(size=n)
    lower = np.zeros(n)
    upper = np.full(n, 6.0)
    free = rng.random(n) < 0.25
    lower[free] = -np.inf
    upper[free] = np.inf
    # keep the model bounded: cap free vars via rows
    extra = np.eye(n)[free]
    if extra.size:
        a = np.vstack([a, extra, -extra])
        b = np.concatenate([b, np.full(free.sum(), 8.0), np.full(free.sum(), 8.0)])
        senses += ["<="] * (2 * free.sum())
    return box(c, a, b, senses, lower, upper)


def test_random_instances_match_scipy():
    rng = np.random.default_rng(2024)
    solved = 0
    for _ in range(60):
        p = _random_instance(rng)
        sol = solve(p)
        a_ub, b_ub, a_eq, b_eq = [], [], [], []
        for row, s, rhs in zip(p.a, p.senses, p.b):
            if s == "<=":
                a_ub.append(row)
                b_ub.append(rhs)
            elif s == ">=":
                a_ub.append(-row)
                b_ub.append(-rhs)
            else:
                a_eq.append(row)
                b_eq.append(rhs)
        ref = linprog(
            -p.c,
            A_ub=np.asarray(a_ub) if a_ub else None,
            b_ub=np.asarray(b_ub) if b_ub else None,
            A_eq=np.asarray(a_eq) if a_eq else None,
            b_eq=np.asarray(b_eq) if b_eq else None,
            bounds=list(zip(p.lower, p.upper)),
            method="highs",
        )
        if sol.status == "optimal":
            assert ref.status == 0
            assert sol.objective_value == pytest.approx(-ref.fun, abs=1e-6, rel=1e-6)
            assert sol.max_violation <= 1e-9 * (1 + np.max(np.abs(p.b)))
            assert abs(sol.objective_value - sol.dual_objective) <= 1e-8 * (1 + abs(sol.objective_value))
            solved += 1
        elif sol.status == "infeasible":
            assert ref.status == 2
        else:
            assert ref.status == 3
    assert solved >= 40  # construction makes most instances feasible/bounded


def test_degenerate_problem_terminates():
    # classic cycling-prone instance (Beale); the lexicographic rule must terminate it
    c = np.array([0.75, -150, 0.02, -6])
    a = np.array([
        [0.25, -60, -0.04, 9],
        [0.5, -90, -0.02, 3],
        [0, 0, 1, 0],
    ])
    b = np.array([0.0, 0.0, 1.0])
    p = box(c, a, b, ["<="] * 3)  # maximize c over the degenerate vertex fan
    sol = solve(p)
    assert sol.status == "optimal"
    ref = linprog(-c, A_ub=a, b_ub=b, bounds=[(0, None)] * 4, method="highs")
    assert sol.objective_value == pytest.approx(-ref.fun, abs=1e-9)
