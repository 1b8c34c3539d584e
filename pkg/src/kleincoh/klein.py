"""Klein surfaces: topological invariants and model involutions on H^1(M; Z/2).

A Klein surface is recorded by its genus ``g``, the number ``n`` of fixed
circles and the bit ``a`` (0 when the complement of the fixed locus has two
components).  Model matrices use the row convention of :mod:`kleincoh.f2`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .f2 import BitMatrix, dickson_invariant, is_involution


class InvariantError(ValueError):
    """Invalid curve data.  ``relation`` names the violated constraint."""

    def __init__(self, relation: str, detail: str = ""):
        self.relation = relation
        super().__init__(f"{relation}" + (f" ({detail})" if detail else ""))


class CurveType(str, enum.Enum):
    TYPE0 = "0"
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True)
class CurveInvariants:
    g: int
    n: int
    a: int

    def __post_init__(self):
        validate(self.g, self.n, self.a)


@dataclass(frozen=True)
class DerivedInvariants:
    curve: CurveInvariants
    curve_type: CurveType
    g_prime: int
    c: int
    dickson: int | None
    is_m_curve: bool

    @property
    def dickson_correction(self) -> int | None:
        """The ``D - 2g'`` offset: 0 for type I, 1 or 2 for type II."""
        if self.dickson is None:
            return None
        return self.dickson - 2 * self.g_prime

    def to_json_obj(self) -> dict:
        return {
            "type": self.curve_type.value,
            "g": self.curve.g,
            "n": self.curve.n,
            "a": self.curve.a,
            "g_prime": self.g_prime,
            "c": self.c,
            "dickson": self.dickson,
            "m_curve": self.is_m_curve,
        }


def validate(g: int, n: int, a: int) -> None:
    if a not in (0, 1):
        raise InvariantError("orientability bit: a in {0,1}", f"a={a}")
    if g < 2:
        raise InvariantError("genus: g >= 2", f"g={g}")
    if n < 0:
        raise InvariantError("fixed components: n >= 0", f"n={n}")
    if n > g + 1:
        raise InvariantError("Harnack: n <= g+1", f"g={g}, n={n}")
    if n == 0 and a == 0:
        raise InvariantError("type 0: n=0 forces a=1", f"g={g}")
    if a == 0 and (g - n) % 2 == 0:
        raise InvariantError("parity: a=0 requires g-n odd (g = 2g'+n-1)", f"g={g}, n={n}")
    if a == 1 and g < n:
        raise InvariantError("g' >= 0: a=1 requires n <= g (g = 2g'+n+c)", f"g={g}, n={n}")


def is_m_curve(g: int, n: int) -> bool:
    return n == g + 1


def classify(g: int, n: int, a: int) -> DerivedInvariants:
    curve = CurveInvariants(g, n, a)
    if a == 0:
        g_prime = (g - n + 1) // 2
        return DerivedInvariants(curve, CurveType.TYPE_I, g_prime, 0, 2 * g_prime, is_m_curve(g, n))
    c = (g - n) % 2
    g_prime = (g - n - c) // 2
    if n == 0:
        # 2g'+c' would exceed g here; the Dickson bound rules it out
        return DerivedInvariants(curve, CurveType.TYPE0, g_prime, c, None, False)
    correction = 1 if (g - n) % 2 == 0 else 2
    return DerivedInvariants(curve, CurveType.TYPE_II, g_prime, c, 2 * g_prime + correction, False)


def symplectic_form(g: int) -> BitMatrix:
    """Intersection form in the basis ``(a_1, b_1, ..., a_g, b_g)``."""
    rows = []
    for i in range(g):
        rows += [1 << (2 * i + 1), 1 << (2 * i)]
    return BitMatrix(2 * g, 2 * g, tuple(rows))


def preserves_form(m: BitMatrix) -> bool:
    j = symplectic_form(m.n_rows // 2)
    return m.transpose() @ j @ m == j


def _a(i: int) -> int:
    return 1 << (2 * (i - 1))


def _b(i: int) -> int:
    return 1 << (2 * (i - 1) + 1)


def type1_involution_matrix(g_prime: int, n: int) -> BitMatrix:
    """Reflection model of a type I curve with invariants ``(2g'+n-1, n, 0)``.

    Handle ``j`` is exchanged with its mirror ``g+1-j`` for ``j <= g'``; the
    ``n-1`` middle handles are fixed.
    """
    if g_prime < 0 or n < 1:
        raise InvariantError("type I model: g' >= 0 and n >= 1", f"g'={g_prime}, n={n}")
    g = 2 * g_prime + n - 1
    if g < 2:
        raise InvariantError("genus: g >= 2", f"g = 2g'+n-1 = {g}")
    image = {}
    for h in range(1, g + 1):
        mirror = g + 1 - h if (h <= g_prime or h > g - g_prime) else h
        image[h] = mirror
    rows = []
    for h in range(1, g + 1):
        rows += [_a(image[h]), _b(image[h])]
    return BitMatrix(2 * g, 2 * g, tuple(rows))


def type2_involution_matrix(g: int, n: int) -> BitMatrix:
    """Surgery model of a type II curve: ``n`` reflected cylinders on ``T_{g-n}``.

    Basis order ``(a_1, b_1, ..., a_n, b_n, alpha_1, beta_1, ..., alpha_m, beta_m)``
    with ``m = g - n``.  With ``c = a_1 + ... + a_n`` and ``j* = m + 1 - j``:

    * ``a_i -> a_i``
    * ``alpha_j -> alpha_{j*} + c`` and ``beta_j -> beta_{j*}``
    * ``b_i -> b_i + c + beta_1 + ... + beta_m``
    """
    if n < 1 or g <= n:
        raise InvariantError("type II model: g > n >= 1", f"g={g}, n={n}")
    m = g - n
    size = 2 * g
    c = 0
    for i in range(1, n + 1):
        c |= _a(i)

    def alpha(j: int) -> int:
        return 1 << (2 * n + 2 * (j - 1))

    def beta(j: int) -> int:
        return 1 << (2 * n + 2 * (j - 1) + 1)

    beta_sum = 0
    for j in range(1, m + 1):
        beta_sum |= beta(j)

    rows = []
    for i in range(1, n + 1):
        rows += [_a(i), _b(i) ^ c ^ beta_sum]
    for j in range(1, m + 1):
        rows += [alpha(m + 1 - j) ^ c, beta(m + 1 - j)]
    out = BitMatrix(size, size, tuple(rows))
    if not is_involution(out):
        raise AssertionError(f"type II model for g={g}, n={n} is not an involution")
    return out


def model_matrix(g: int, n: int, a: int) -> BitMatrix | None:
    """The model involution for ``(g, n, a)``, or ``None`` when no model applies."""
    info = classify(g, n, a)
    if info.curve_type is CurveType.TYPE_I:
        return type1_involution_matrix(info.g_prime, n)
    if info.curve_type is CurveType.TYPE_II and g > n:
        return type2_involution_matrix(g, n)
    return None


def model_dickson(g: int, n: int, a: int) -> int | None:
    m = model_matrix(g, n, a)
    return None if m is None else dickson_invariant(m)
