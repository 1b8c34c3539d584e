"""Cohomology of the moduli stack of real bundles over a type I curve.

Presentations are assembled as free tensor products, and their Poincare
series are compared against the product formula for the Eilenberg-Moore
column ``V_{n,r} (x) A_{g',r} (x) Z/2[c_1..c_r]`` (``deg c_k = 2k``), with the
``B(Omega^2 U(r))`` factor supplying ``Z/2[f_2..f_r]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .klein import CurveInvariants, CurveType, InvariantError, classify
from .series import (
    DEFAULT_TRUNCATION,
    AlgebraPresentation,
    GeneratorSpec,
    Kind,
    PoincareSeries,
    product_closed_form,
    series_eq,
    series_mul,
    series_of,
)
from .steenrod import omega_bso_presentation


@dataclass(frozen=True)
class ModuliParams:
    g_prime: int
    n: int
    r: int
    d: int = 0

    def __post_init__(self):
        if self.g_prime < 0 or self.n < 1:
            raise InvariantError("type I data: g' >= 0 and n >= 1", f"g'={self.g_prime}, n={self.n}")
        if self.r < 1:
            raise InvariantError("rank: r >= 1", f"r={self.r}")
        info = classify(self.g, self.n, 0)
        assert info.curve_type is CurveType.TYPE_I

    @property
    def g(self) -> int:
        return 2 * self.g_prime + self.n - 1

    @property
    def curve(self) -> CurveInvariants:
        return CurveInvariants(self.g, self.n, 0)

    def to_json_obj(self) -> dict:
        return {"g": self.g, "n": self.n, "a": 0, "g_prime": self.g_prime, "r": self.r, "d": self.d}


def rank1_presentation(g_prime: int, n: int, d: int = 0) -> AlgebraPresentation:
    """``Z/2[omega_1] (x) /\\[alpha_1..alpha_{2g'}] (x) /\\[beta_1..beta_{n-1}]``, all in degree 1."""
    params = ModuliParams(g_prime, n, 1, d)
    gens = [GeneratorSpec("omega", 1, Kind.POLYNOMIAL, sup=1)]
    gens += [GeneratorSpec("alpha", 1, Kind.EXTERIOR, sub=i) for i in range(1, 2 * g_prime + 1)]
    gens += [GeneratorSpec("beta", 1, Kind.EXTERIOR, sub=i) for i in range(1, n)]
    return AlgebraPresentation(tuple(gens), {"source": "rank1", **params.to_json_obj()})


def rankr_presentation(g_prime: int, n: int, r: int, d: int = 0) -> AlgebraPresentation:
    params = ModuliParams(g_prime, n, r, d)
    if r == 1:
        return rank1_presentation(g_prime, n, d)
    gens = [GeneratorSpec("omega", k, Kind.POLYNOMIAL, sup=k) for k in range(1, r + 1)]
    gens += [
        GeneratorSpec("alpha", 2 * k - 1, Kind.EXTERIOR, sup=k, sub=i)
        for k in range(1, r + 1)
        for i in range(1, 2 * g_prime + 1)
    ]
    gens += [GeneratorSpec("beta", k, Kind.EXTERIOR, sup=k, sub=i) for k in range(1, r + 1) for i in range(1, n)]
    loop_space = omega_bso_presentation(r)
    for j in range(1, n + 1):
        gens += [GeneratorSpec("d", w.degree, w.kind, w.exponent, sup=j, sub=w.sub) for w in loop_space.generators]
    gens += [GeneratorSpec("f", 2 * k - 2, Kind.POLYNOMIAL, sub=k) for k in range(2, r + 1)]
    return AlgebraPresentation(tuple(gens), {"source": "rankr", **params.to_json_obj()})


def em_column_series(g_prime: int, n: int, r: int, truncation: int = DEFAULT_TRUNCATION) -> PoincareSeries:
    ModuliParams(g_prime, n, r)
    factors = [("plus", i, n) for i in range(1, r + 1)]
    factors += [("plus", i, n) for i in range(1, r)]
    factors += [("plus", 2 * i - 1, 2 * g_prime) for i in range(1, r + 1)]
    factors += [("inverse", 2 * k, 1) for k in range(1, r + 1)]
    return product_closed_form(factors, truncation)


def stack_series(g_prime: int, n: int, r: int, truncation: int = DEFAULT_TRUNCATION) -> PoincareSeries:
    loops = product_closed_form([("inverse", 2 * k - 2, 1) for k in range(2, r + 1)], truncation)
    return series_mul(em_column_series(g_prime, n, r, truncation), loops)


@dataclass(frozen=True)
class CrossCheck:
    params: ModuliParams
    truncation: int
    em_column: bool
    stack: bool
    rank1: bool

    @property
    def passed(self) -> bool:
        return self.em_column and self.stack and self.rank1

    def to_json_obj(self) -> dict:
        return {
            "em_column": self.em_column,
            "stack": self.stack,
            "rank1": self.rank1,
            "passed": self.passed,
            "truncation": self.truncation,
        }


def cross_check(g_prime: int, n: int, r: int, truncation: int = DEFAULT_TRUNCATION) -> CrossCheck:
    """Compare the presentation's series with the product formulas.

    * em_column: presentation without the ``f_k`` against the column formula
    * stack: full presentation against the column formula times ``prod 1/(1-t^{2k-2})``
    * rank1: rank-one presentation against ``(1+t)^g / (1-t)``
    """
    params = ModuliParams(g_prime, n, r)
    pres = rankr_presentation(g_prime, n, r)
    em_ok = series_eq(series_of(pres.without("f"), truncation), em_column_series(g_prime, n, r, truncation))
    stack_ok = series_eq(series_of(pres, truncation), stack_series(g_prime, n, r, truncation))
    closed = product_closed_form([("plus", 1, params.g), ("inverse", 1, 1)], truncation)
    rank1_ok = series_eq(series_of(rank1_presentation(g_prime, n), truncation), closed)
    return CrossCheck(params, truncation, em_ok, stack_ok, rank1_ok)


@dataclass(frozen=True)
class ABClass:
    label: str
    index: int
    sub: int | None
    degree: int

    @property
    def name(self) -> str:
        if self.label == "a":
            return f"a^({self.index})_{self.sub}"
        return f"{self.label}_{self.index}"

    @property
    def unit_degree(self) -> bool:
        return self.degree == 0


def ab_inventory(r: int, g: int) -> list[ABClass]:
    """Atiyah-Bott classes of the complex stack: ``c_i``, ``a^(i)_j``, ``f_i``."""
    if r < 1:
        raise InvariantError("rank: r >= 1", f"r={r}")
    if g < 2:
        raise InvariantError("genus: g >= 2", f"g={g}")
    out = [ABClass("c", i, None, 2 * i) for i in range(1, r + 1)]
    out += [ABClass("a", i, j, 2 * i - 1) for i in range(1, r + 1) for j in range(1, 2 * g + 1)]
    out += [ABClass("f", i, None, 2 * i - 2) for i in range(1, r + 1)]
    return out


def moduli_report(g_prime: int, n: int, r: int, d: int = 0, truncation: int = DEFAULT_TRUNCATION) -> dict:
    params = ModuliParams(g_prime, n, r, d)
    pres = rankr_presentation(g_prime, n, r, d)
    return {
        "params": params.to_json_obj(),
        "presentation": pres.to_json_obj(),
        "poincare": series_of(pres, truncation).to_json_obj(),
        "checks": cross_check(g_prime, n, r, truncation).to_json_obj(),
    }
