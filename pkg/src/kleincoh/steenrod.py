"""Steenrod squares on H*(BSO(r); Z/2) = Z/2[w_2, ..., w_r].

Squares of single Stiefel-Whitney classes come from the Wu formula and are
extended to products by the Cartan formula.  ``w_1`` is identically zero.
On top of that sit the degree-doubling operation ``Sq_1``, reduction modulo
decomposables, cup-one heights and the resulting presentation of
H*(Omega BSO(r)) = H*(SO(r)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .series import AlgebraPresentation, GeneratorSpec, Kind

Exponents = tuple[tuple[int, int], ...]


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 via Lucas: odd iff the bits of k are a subset of those of n."""
    if k == 0:
        return 1
    if k < 0 or n < k:
        return 0
    return 1 if (k & ~n) == 0 else 0


@dataclass(frozen=True, order=True)
class SWMonomial:
    exponents: Exponents = ()

    @classmethod
    def of(cls, powers: Mapping[int, int]) -> "SWMonomial":
        return cls(tuple(sorted((j, e) for j, e in powers.items() if e)))

    @property
    def degree(self) -> int:
        return sum(j * e for j, e in self.exponents)

    def __mul__(self, other: "SWMonomial") -> "SWMonomial":
        merged = dict(self.exponents)
        for j, e in other.exponents:
            merged[j] = merged.get(j, 0) + e
        return SWMonomial.of(merged)

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "".join(f"w{j}" if e == 1 else f"w{j}^{e}" for j, e in self.exponents)


@dataclass(frozen=True)
class SWPolynomial:
    rank: int
    monomials: frozenset[SWMonomial] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "monomials", frozenset(self.monomials))
        for mono in self.monomials:
            for j, _ in mono.exponents:
                if not 2 <= j <= self.rank:
                    raise ValueError(f"w{j} does not exist in H*(BSO({self.rank}))")

    @classmethod
    def zero(cls, rank: int) -> "SWPolynomial":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "SWPolynomial":
        return cls(rank, frozenset([SWMonomial()]))

    @classmethod
    def w(cls, j: int, rank: int) -> "SWPolynomial":
        """``w_j`` with the conventions ``w_0 = 1``, ``w_1 = 0``, ``w_j = 0`` above the rank."""
        if j == 0:
            return cls.one(rank)
        if j == 1 or j > rank:
            return cls.zero(rank)
        return cls(rank, frozenset([SWMonomial(((j, 1),))]))

    @classmethod
    def from_monomials(cls, rank: int, monos: Iterable[SWMonomial]) -> "SWPolynomial":
        acc: set[SWMonomial] = set()
        for m in monos:
            acc ^= {m}
        return cls(rank, frozenset(acc))

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def _check(self, other: "SWPolynomial") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "SWPolynomial") -> "SWPolynomial":
        self._check(other)
        return SWPolynomial(self.rank, self.monomials ^ other.monomials)

    def __mul__(self, other: "SWPolynomial") -> "SWPolynomial":
        self._check(other)
        return SWPolynomial.from_monomials(self.rank, (a * b for a in self.monomials for b in other.monomials))

    def degrees(self) -> set[int]:
        return {m.degree for m in self.monomials}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree of a zero or inhomogeneous polynomial")
        return degs.pop()

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        return " + ".join(str(m) for m in sorted(self.monomials, key=lambda m: (m.degree, m.exponents)))

    def to_json_obj(self) -> dict:
        return {
            "rank": self.rank,
            "monomials": [
                [{"gen": j, "exp": e} for j, e in m.exponents]
                for m in sorted(self.monomials, key=lambda m: (m.degree, m.exponents))
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SWPolynomial":
        monos = [SWMonomial.of({t["gen"]: t["exp"] for t in m}) for m in obj["monomials"]]
        return cls.from_monomials(obj["rank"], monos)


def wu_sq_on_generator(i: int, j: int, r: int) -> SWPolynomial:
    """``Sq^i(w_j) = sum_t C(j-i+t-1, t) w_{i-t} w_{j+t}`` in H*(BSO(r))."""
    if not 2 <= j <= r:
        raise ValueError(f"w{j} is not a generator of H*(BSO({r}))")
    if i < 0:
        raise ValueError("negative square")
    if i > j:
        return SWPolynomial.zero(r)
    acc = SWPolynomial.zero(r)
    for t in range(i + 1):
        if binom_mod2(j - i + t - 1, t):
            acc = acc + SWPolynomial.w(i - t, r) * SWPolynomial.w(j + t, r)
    return acc


@lru_cache(maxsize=None)
def _sq_monomial(i: int, exps: Exponents, r: int) -> frozenset[SWMonomial]:
    mono = SWMonomial(exps)
    if i == 0:
        return frozenset([mono])
    if not exps:
        return frozenset()
    (j, e), rest = exps[0], exps[1:]
    tail = rest if e == 1 else ((j, e - 1),) + rest
    tail_deg = mono.degree - j
    acc: set[SWMonomial] = set()
    for a in range(max(0, i - tail_deg), min(i, j) + 1):
        left = wu_sq_on_generator(a, j, r)
        if not left:
            continue
        right = _sq_monomial(i - a, tail, r)
        for x in left.monomials:
            for y in right:
                acc ^= {x * y}
    return frozenset(acc)


def sq(i: int, p: SWPolynomial) -> SWPolynomial:
    """Total square ``Sq^i`` on an arbitrary polynomial (additive, Cartan on products)."""
    if i < 0:
        raise ValueError("negative square")
    acc: set[SWMonomial] = set()
    for mono in p.monomials:
        acc ^= _sq_monomial(i, mono.exponents, p.rank)
    return SWPolynomial(p.rank, frozenset(acc))


def sq1(p: SWPolynomial) -> SWPolynomial:
    """``Sq_1(x) = Sq^{|x|-1}(x)``, sending degree m to degree 2m-1."""
    if not p:
        return p
    if not p.is_homogeneous:
        raise ValueError("Sq_1 needs a homogeneous polynomial")
    m = p.degree
    if m < 1:
        raise ValueError("Sq_1 is defined in positive degrees")
    return sq(m - 1, p)


def indecomposable_part(p: SWPolynomial) -> set[int]:
    """Indices j with ``w_j`` present linearly; everything else lies in H+ . H+."""
    return {m.exponents[0][0] for m in p.monomials if len(m.exponents) == 1 and m.exponents[0][1] == 1}


def s_set(r: int) -> list[int]:
    """Generators ``w_k`` not hit by ``Sq_1`` modulo decomposables."""
    if r < 2:
        raise ValueError("H*(BSO(r)) has generators only for r >= 2")
    hit: set[int] = set()
    for j in range(2, r + 1):
        hit |= indecomposable_part(sq1(SWPolynomial.w(j, r)))
    return [k for k in range(2, r + 1) if k not in hit]


def sq1_chain(k: int, r: int) -> list[int]:
    """Indices ``k = j_0, j_1, ...`` of the indecomposables reached by iterating ``Sq_1``."""
    chain = [k]
    x = SWPolynomial.w(k, r)
    while True:
        hit = indecomposable_part(sq1(x))
        if not hit:
            return chain
        if len(hit) != 1:
            raise ArithmeticError(f"Sq_1 of w{chain[-1]} has several indecomposables {sorted(hit)}")
        (j,) = hit
        expected = 2 ** len(chain) * (k - 1) + 1
        if j != expected:
            raise ArithmeticError(f"Sq_1 chain from w{k} reached w{j}, expected w{expected}")
        chain.append(j)
        x = SWPolynomial.w(j, r)


def cup1_height(k: int, r: int) -> int:
    """Number of extra ``Sq_1`` steps before ``w_k`` lands in H+ . H+."""
    if k % 2 or not 2 <= k <= r:
        raise ValueError(f"cup-one height needs an even k with 2 <= k <= r, got k={k}, r={r}")
    return len(sq1_chain(k, r)) - 1


def truncation_exponent(k: int, r: int) -> int:
    return 2 ** (cup1_height(k, r) + 1)


def omega_bso_presentation(r: int) -> AlgebraPresentation:
    """H*(Omega BSO(r)): one truncated class of degree k-1 per even k <= r."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    gens = []
    if r >= 2:
        for k in s_set(r):
            gens.append(GeneratorSpec("wbar", k - 1, Kind.TRUNCATED, truncation_exponent(k, r), sub=k))
    return AlgebraPresentation(tuple(gens), {"source": "omega_bso", "rank": r})


def height_table(r: int) -> list[dict]:
    if r < 2:
        return []
    return [
        {"k": k, "degree": k - 1, "nu": cup1_height(k, r), "exponent": truncation_exponent(k, r)}
        for k in s_set(r)
    ]
