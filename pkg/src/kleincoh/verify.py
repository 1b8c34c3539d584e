"""Acceptance grid shared by ``kleincoh check`` and the test suite.

Each criterion returns a :class:`CriterionResult`; a criterion passes only if
every grid point matches exactly and it finishes within its time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import oracles
from .f2 import BitMatrix, adapted_basis, dickson_invariant, inverse, is_invertible, normal_form_matrix, rank
from .klein import type1_involution_matrix, type2_involution_matrix
from .moduli import cross_check, rank1_presentation, rankr_presentation
from .series import AlgebraPresentation, GeneratorSpec, Kind, series_of
from .steenrod import SWPolynomial, cup1_height, indecomposable_part, omega_bso_presentation, s_set, sq1


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    budget: float
    seconds: float = 0.0
    points: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        if self.passed and self.seconds >= self.budget:
            extra = f"; over budget {self.budget:g}s"
        return f"[{status}] {self.number:>2}. {self.name} ({self.points} points, {self.seconds:.2f}s){extra}"

    def to_json_obj(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.ok,
            "points": self.points,
            "seconds": round(self.seconds, 4),
            "budget": self.budget,
            "failures": self.failures[:5],
        }


@dataclass(frozen=True)
class Grid:
    max_gprime: int = 4
    max_n: int = 6
    max_rank: int = 8
    cap: int = 40


def _type1_points(max_gprime: int, max_n: int):
    for gp in range(max_gprime + 1):
        for n in range(1, max_n + 1):
            if 2 * gp + n - 1 >= 2:
                yield gp, n


def random_invertible(n: int, rng: random.Random) -> BitMatrix:
    while True:
        m = BitMatrix(n, n, tuple(rng.getrandbits(n) for _ in range(n)))
        if is_invertible(m):
            return m


def random_presentation(rng: random.Random, max_gens: int = 6, max_degree: int = 4) -> AlgebraPresentation:
    gens = []
    for i in range(rng.randint(0, max_gens)):
        kind = rng.choice(list(Kind))
        exp = rng.choice([2, 4, 8]) if kind is Kind.TRUNCATED else None
        gens.append(GeneratorSpec("x", rng.randint(1, max_degree), kind, exp, sub=i))
    return AlgebraPresentation(tuple(gens))


def c1_type1_dickson(grid: Grid) -> CriterionResult:
    res = CriterionResult(1, "type I models: rank(sigma + Id) = 2g'", True, 1.0)
    for gp, n in _type1_points(5, 6):
        m = type1_involution_matrix(gp, n)
        got = rank(m + BitMatrix.identity(m.n_rows))
        res.points += 1
        if got != 2 * gp:
            res.failures.append(f"(g'={gp}, n={n}): rank {got} != {2 * gp}")
    return res


def c2_type2_dickson(grid: Grid) -> CriterionResult:
    res = CriterionResult(2, "type II models: rank(sigma + Id) = 2g' + (1 or 2)", True, 1.0)
    for g in range(2, 13):
        for n in range(1, g):
            parity = (g - n) % 2
            gp = (g - n - parity) // 2
            want = 2 * gp + (2 if parity else 1)
            m = type2_involution_matrix(g, n)
            got = rank(m + BitMatrix.identity(m.n_rows))
            res.points += 1
            if got != want:
                res.failures.append(f"(g={g}, n={n}): rank {got} != {want}")
    return res


def c3_normal_form(grid: Grid, samples: int = 1000, seed: int = 20240601) -> CriterionResult:
    res = CriterionResult(3, "adapted basis conjugates random involutions to normal form", True, 5.0)
    rng = random.Random(seed)
    for _ in range(samples):
        g = rng.randint(1, 10)
        s = rng.randint(0, g)
        p = random_invertible(2 * g, rng)
        sigma = p @ normal_form_matrix(g, s) @ inverse(p)
        basis = adapted_basis(sigma)
        c = basis.change_of_basis
        res.points += 1
        if basis.dickson != s or c @ sigma @ inverse(c) != normal_form_matrix(g, s):
            res.failures.append(f"g={g}, s={s}: conjugation did not reproduce the normal form")
    return res


def c4_cup1_heights(grid: Grid) -> CriterionResult:
    res = CriterionResult(4, "cup-one heights match the closed form; S(r) = even indices", True, 10.0)
    for r in range(2, 65):
        for k in range(2, r + 1, 2):
            nu = cup1_height(k, r)
            want = oracles.min_power_of_two(k - 1, r)
            res.points += 1
            if 2 ** (nu + 1) != want:
                res.failures.append(f"k={k}, r={r}: 2^(nu+1) = {2 ** (nu + 1)} != {want}")
    for r in range(2, 17):
        res.points += 1
        if s_set(r) != list(range(2, r + 1, 2)):
            res.failures.append(f"S({r}) = {s_set(r)}")
    return res


def c5_so_series(grid: Grid) -> CriterionResult:
    res = CriterionResult(5, "series of H*(Omega BSO(r)) = prod (1 + t^i), i < r", True, 1.0)
    for r in range(1, 17):
        res.points += 1
        got = list(series_of(omega_bso_presentation(r), 60).coefficients)
        if got != oracles.so_series(r, 60):
            res.failures.append(f"r={r}")
    return res


def c6_rank1_series(grid: Grid) -> CriterionResult:
    res = CriterionResult(6, "rank-1 series = (1+t)^g / (1-t)", True, 1.0)
    for gp, n in _type1_points(5, 6):
        g = 2 * gp + n - 1
        want = oracles.expand_product([oracles.one_plus(1)] * g + [oracles.geometric(1, 40)], 40)
        res.points += 1
        if list(series_of(rank1_presentation(gp, n), 40).coefficients) != want:
            res.failures.append(f"(g'={gp}, n={n})")
    head = series_of(rank1_presentation(1, 1), 40).coefficients[:5]
    res.points += 1
    if head != (1, 3, 4, 4, 4):
        res.failures.append(f"(1,1) begins {head}")
    return res


def c7_cross_check(grid: Grid) -> CriterionResult:
    res = CriterionResult(7, "presentation series = EM column / stack series", True, 30.0)
    for gp, n in _type1_points(grid.max_gprime, grid.max_n):
        for r in range(1, grid.max_rank + 1):
            rep = cross_check(gp, n, r, grid.cap)
            res.points += 1
            if not rep.passed:
                res.failures.append(f"(g'={gp}, n={n}, r={r}): {rep.to_json_obj()}")
    return res


def c8_rank1_specialization(grid: Grid) -> CriterionResult:
    res = CriterionResult(8, "rank-r presentation at r=1 equals the rank-1 presentation", True, 1.0)
    for gp, n in _type1_points(max(5, grid.max_gprime), grid.max_n):
        a = rankr_presentation(gp, n, 1)
        b = rank1_presentation(gp, n)
        res.points += 1
        if a.shape_multiset() != b.shape_multiset() or a.generators != b.generators:
            res.failures.append(f"(g'={gp}, n={n})")
    return res


def c9_steenrod_points(grid: Grid) -> CriterionResult:
    res = CriterionResult(9, "Steenrod point checks at ranks 2 and 3", True, 1.0)
    w = SWPolynomial.w
    checks = {
        "Sq_1(w2) at r=3 has indecomposable part {3}": indecomposable_part(sq1(w(2, 3))) == {3},
        "Sq_1(w3) at r=3 = w2 w3": sq1(w(3, 3)) == w(2, 3) * w(3, 3),
        "nu_2 = 0 at r=2": cup1_height(2, 2) == 0,
        "nu_2 = 1 at r=3": cup1_height(2, 3) == 1,
    }
    for label, ok in checks.items():
        res.points += 1
        if not ok:
            res.failures.append(label)
    return res


def c10_oracles(grid: Grid, samples: int = 400, seed: int = 7) -> CriterionResult:
    res = CriterionResult(10, "series and rank agree with brute-force enumeration", True, 10.0)
    rng = random.Random(seed)
    for _ in range(samples):
        p = random_presentation(rng)
        res.points += 1
        if list(series_of(p, 12).coefficients) != oracles.brute_series(p, 12):
            res.failures.append(f"series of {[g.shape() for g in p.generators]}")
    for _ in range(samples):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = BitMatrix(rows, cols, tuple(rng.getrandbits(cols) for _ in range(rows)))
        res.points += 1
        if rank(m) != oracles.brute_rank(m):
            res.failures.append(f"rank of {m.to_lists()}")
    return res


CRITERIA: list[Callable[[Grid], CriterionResult]] = [
    c1_type1_dickson,
    c2_type2_dickson,
    c3_normal_form,
    c4_cup1_heights,
    c5_so_series,
    c6_rank1_series,
    c7_cross_check,
    c8_rank1_specialization,
    c9_steenrod_points,
    c10_oracles,
]


def run_criterion(fn: Callable[[Grid], CriterionResult], grid: Grid) -> CriterionResult:
    start = time.perf_counter()
    res = fn(grid)
    res.seconds = time.perf_counter() - start
    res.passed = not res.failures
    return res


def run_all(grid: Grid = Grid()) -> list[CriterionResult]:
    return [run_criterion(fn, grid) for fn in CRITERIA]
