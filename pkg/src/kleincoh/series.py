"""Free graded-commutative algebras over GF(2) and their Poincare series.

An :class:`AlgebraPresentation` is a tensor product of one-generator factors,
each polynomial, exterior, or truncated polynomial ``k[x]/(x^p)``.  Series
are truncated at a fixed degree and carry exact Python integers, so there is
no overflow to guard against.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_TRUNCATION = 40


class Kind(str, enum.Enum):
    POLYNOMIAL = "polynomial"
    EXTERIOR = "exterior"
    TRUNCATED = "truncated"


def _is_power_of_two(p: int) -> bool:
    return p >= 1 and p & (p - 1) == 0


@dataclass(frozen=True)
class GeneratorSpec:
    label: str
    degree: int
    kind: Kind
    exponent: int | None = None
    sup: int | None = None
    sub: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.degree < 1:
            raise ValueError(f"generator {self.name} has degree {self.degree} < 1")
        if self.kind is Kind.TRUNCATED:
            if self.exponent is None or self.exponent < 2 or not _is_power_of_two(self.exponent):
                raise ValueError(f"truncation exponent of {self.name} must be a power of 2 >= 2")
        elif self.exponent is not None:
            raise ValueError(f"only truncated generators carry an exponent ({self.name})")

    @property
    def key(self) -> tuple:
        return (self.label, self.sup, self.sub)

    @property
    def name(self) -> str:
        text = self.label
        if self.sup is not None:
            text += f"^{self.sup}"
        if self.sub is not None:
            text += f"_{self.sub}"
        return text

    @property
    def top_exponent(self) -> int | None:
        """Largest exponent with a nonzero power, ``None`` when unbounded."""
        if self.kind is Kind.POLYNOMIAL:
            return None
        if self.kind is Kind.EXTERIOR:
            return 1
        return self.exponent - 1

    def shape(self) -> tuple:
        """Label-free description used to compare presentations up to renaming."""
        return (self.degree, self.kind.value, self.exponent)

    def to_json_obj(self) -> dict:
        obj = {"label": self.label, "sup": self.sup, "sub": self.sub, "degree": self.degree, "kind": self.kind.value}
        if self.kind is Kind.TRUNCATED:
            obj["exponent"] = self.exponent
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GeneratorSpec":
        return cls(obj["label"], obj["degree"], Kind(obj["kind"]), obj.get("exponent"), obj.get("sup"), obj.get("sub"))


@dataclass(frozen=True)
class AlgebraPresentation:
    generators: tuple[GeneratorSpec, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        seen = Counter(gen.key for gen in self.generators)
        dupes = [k for k, v in seen.items() if v > 1]
        if dupes:
            raise ValueError(f"duplicate generator labels: {dupes}")

    def __len__(self) -> int:
        return len(self.generators)

    def tensor(self, other: "AlgebraPresentation") -> "AlgebraPresentation":
        return AlgebraPresentation(self.generators + other.generators, {**self.meta, **other.meta})

    def without(self, label: str) -> "AlgebraPresentation":
        return AlgebraPresentation(tuple(g for g in self.generators if g.label != label), dict(self.meta))

    def shape_multiset(self) -> Counter:
        return Counter(g.shape() for g in self.generators)

    def to_json_obj(self) -> dict:
        return {"generators": [g.to_json_obj() for g in self.generators], "meta": self.meta}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "AlgebraPresentation":
        return cls(tuple(GeneratorSpec.from_json_obj(g) for g in obj["generators"]), dict(obj.get("meta", {})))


@dataclass(frozen=True)
class PoincareSeries:
    truncation: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if self.truncation < 0:
            raise ValueError("truncation degree must be >= 0")
        if len(self.coefficients) != self.truncation + 1:
            raise ValueError(f"expected {self.truncation + 1} coefficients, got {len(self.coefficients)}")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("Poincare series coefficients must be nonnegative")

    @classmethod
    def one(cls, truncation: int) -> "PoincareSeries":
        return cls(truncation, (1,) + (0,) * truncation)

    def __getitem__(self, d: int) -> int:
        return self.coefficients[d]

    def __mul__(self, other: "PoincareSeries") -> "PoincareSeries":
        return series_mul(self, other)

    def truncate(self, truncation: int) -> "PoincareSeries":
        if truncation > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return PoincareSeries(truncation, self.coefficients[: truncation + 1])

    def to_json_obj(self) -> dict:
        return {"truncation": self.truncation, "coefficients": list(self.coefficients)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PoincareSeries":
        return cls(obj["truncation"], tuple(obj["coefficients"]))

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
            terms.append(mono if c == 1 and d else f"{c}{'' if d == 0 else '*' + mono}")
        return " + ".join(terms or ["0"]) + f" + O(t^{self.truncation + 1})"


# In-place factor multiplications on a coefficient list of length N+1.

def _times_one_plus(c: list[int], k: int, times: int = 1) -> None:
    for _ in range(times):
        for d in range(len(c) - 1, k - 1, -1):
            c[d] += c[d - k]


def _times_geometric(c: list[int], k: int, times: int = 1) -> None:
    for _ in range(times):
        for d in range(k, len(c)):
            c[d] += c[d - k]


def _times_truncated(c: list[int], k: int, p: int) -> None:
    src = list(c)
    for d in range(len(c)):
        acc = 0
        for e in range(p):
            if d - e * k < 0:
                break
            acc += src[d - e * k]
        c[d] = acc


def factor_series(gen: GeneratorSpec, truncation: int) -> PoincareSeries:
    return series_of(AlgebraPresentation((gen,)), truncation)


def series_of(p: AlgebraPresentation, truncation: int = DEFAULT_TRUNCATION) -> PoincareSeries:
    if truncation < 0:
        raise ValueError("truncation degree must be >= 0")
    c = [1] + [0] * truncation
    for gen in p.generators:
        if gen.kind is Kind.POLYNOMIAL:
            _times_geometric(c, gen.degree)
        elif gen.kind is Kind.EXTERIOR:
            _times_one_plus(c, gen.degree)
        else:
            _times_truncated(c, gen.degree, gen.exponent)
    return PoincareSeries(truncation, tuple(c))


def series_mul(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    n = min(a.truncation, b.truncation)
    out = [0] * (n + 1)
    for i in range(n + 1):
        ai = a.coefficients[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coefficients[j]
    return PoincareSeries(n, tuple(out))


def series_eq(a: PoincareSeries, b: PoincareSeries) -> bool:
    """Coefficientwise equality up to the smaller truncation degree."""
    n = min(a.truncation, b.truncation)
    return a.coefficients[: n + 1] == b.coefficients[: n + 1]


def dim_in_degree(p: AlgebraPresentation, d: int) -> int:
    return series_of(p, d).coefficients[d]


def product_closed_form(factors: Iterable[tuple[str, int, int]], truncation: int) -> PoincareSeries:
    """Exact product of factors ``(pattern, degree, multiplicity)``.

    ``pattern`` is ``"plus"`` for ``(1 + t^k)^m`` or ``"inverse"`` for
    ``(1 - t^k)^(-m)``.
    """
    c = [1] + [0] * truncation
    for pattern, k, mult in factors:
        if k < 1:
            raise ValueError(f"factor degree must be >= 1, got {k}")
        if mult < 0:
            raise ValueError(f"multiplicity must be >= 0, got {mult}")
        if pattern == "plus":
            _times_one_plus(c, k, mult)
        elif pattern == "inverse":
            _times_geometric(c, k, mult)
        else:
            raise ValueError(f"unknown factor pattern {pattern!r}")
    return PoincareSeries(truncation, tuple(c))


def exterior(label: str, degrees: Sequence[int]) -> AlgebraPresentation:
    return AlgebraPresentation(
        tuple(GeneratorSpec(label, d, Kind.EXTERIOR, sub=i + 1) for i, d in enumerate(degrees))
    )


def render(p: AlgebraPresentation) -> str:
    """Text form grouping consecutive factors of the same kind and label."""
    if not p.generators:
        return "Z/2"
    parts: list[str] = []
    group: list[GeneratorSpec] = []

    def flush():
        if not group:
            return
        names = ",".join(_short(g) for g in group)
        head = group[0]
        if head.kind is Kind.POLYNOMIAL:
            parts.append(f"Z/2[{names}]")
        elif head.kind is Kind.EXTERIOR:
            parts.append(f"/\\[{names}]")
        else:
            parts.extend(f"Z/2[{_short(g)}]/({_short(g)}^{g.exponent})" for g in group)
        group.clear()

    for gen in p.generators:
        if group and (gen.kind is not group[0].kind or gen.label != group[0].label):
            flush()
        group.append(gen)
    flush()
    return " (x) ".join(parts)


_SHORT = {"omega": "w", "alpha": "a", "beta": "b", "wbar": "wbar", "d": "d", "f": "f"}


def _short(g: GeneratorSpec) -> str:
    text = _SHORT.get(g.label, g.label)
    if g.sup is not None and g.label != "omega":
        text += f"^{g.sup}"
    if g.label == "omega" and g.sup is not None:
        return f"{text}{g.sup}"
    if g.sub is not None:
        text += f"_{g.sub}"
    return text
