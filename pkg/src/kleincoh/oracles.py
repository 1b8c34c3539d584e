"""Brute-force reference computations.

Deliberately naive: these enumerate instead of eliminating or convolving,
and share no code with the main routines they are compared against.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .f2 import BitMatrix
from .series import AlgebraPresentation


def row_space(m: BitMatrix) -> set[tuple[int, ...]]:
    rows = [m.row(i) for i in range(m.n_rows)]
    space = set()
    for choice in itertools.product((0, 1), repeat=len(rows)):
        v = [0] * m.n_cols
        for pick, row in zip(choice, rows):
            if pick:
                v = [x ^ y for x, y in zip(v, row)]
        space.add(tuple(v))
    return space


def brute_rank(m: BitMatrix) -> int:
    return len(row_space(m)).bit_length() - 1


def brute_series(p: AlgebraPresentation, truncation: int) -> list[int]:
    """Count monomials by total degree, enumerating every admissible exponent vector."""
    ranges = []
    for gen in p.generators:
        top = truncation // gen.degree
        if gen.top_exponent is not None:
            top = min(top, gen.top_exponent)
        ranges.append(range(top + 1))
    counts = [0] * (truncation + 1)
    degrees = [gen.degree for gen in p.generators]
    for exps in itertools.product(*ranges):
        total = sum(e * d for e, d in zip(exps, degrees))
        if total <= truncation:
            counts[total] += 1
    return counts


def poly_mul(a: Sequence[int], b: Sequence[int], truncation: int) -> list[int]:
    out = [0] * (truncation + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= truncation:
                out[i + j] += x * y
    return out


def expand_product(polys: Sequence[Sequence[int]], truncation: int) -> list[int]:
    acc = [1] + [0] * truncation
    for p in polys:
        acc = poly_mul(acc, p, truncation)
    return acc


def one_plus(k: int) -> list[int]:
    p = [0] * (k + 1)
    p[0] = p[k] = 1
    return p


def geometric(k: int, truncation: int) -> list[int]:
    return [1 if d % k == 0 else 0 for d in range(truncation + 1)]


def so_series(r: int, truncation: int) -> list[int]:
    """``prod_{i=1}^{r-1} (1 + t^i)``, the Poincare polynomial of SO(r)."""
    return expand_product([one_plus(i) for i in range(1, r)], truncation)


def min_power_of_two(odd: int, r: int) -> int:
    p = 1
    while odd * p < r:
        p *= 2
    return p
