"""Dense linear algebra over GF(2).

Rows are packed into Python integers: bit ``j`` of a row holds the entry in
column ``j``.  Vectors handed across the public API are tuples of 0/1.

Involutions act on *row* vectors, ``v -> v @ s``.  With that convention the
matrix of ``s`` in a basis whose vectors are the rows of ``C`` is
``C @ s @ C^-1``, and row ``i`` of a model matrix is the image of basis
vector ``i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Vector = tuple[int, ...]


class DimensionError(ValueError):
    pass


class NotInvolutionError(ValueError):
    pass


class MatrixFormatError(ValueError):
    pass


def _pack(bits: Sequence[int]) -> int:
    word = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} is not a bit")
        if b:
            word |= 1 << j
    return word


def _unpack(word: int, width: int) -> Vector:
    return tuple((word >> j) & 1 for j in range(width))


def _lowbit(word: int) -> int:
    return (word & -word).bit_length() - 1


@dataclass(frozen=True)
class BitMatrix:
    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n_rows:
            raise DimensionError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        limit = 1 << self.n_cols
        for word in self.rows:
            if not 0 <= word < limit:
                raise DimensionError(f"row {word:#x} does not fit in {self.n_cols} columns")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], n_cols: int | None = None) -> "BitMatrix":
        if n_cols is None:
            n_cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != n_cols:
                raise DimensionError("ragged matrix")
        return cls(len(entries), n_cols, tuple(_pack(row) for row in entries))

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[int]], n_cols: int) -> "BitMatrix":
        return cls.from_lists([list(v) for v in vectors], n_cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(n_rows, n_cols, (0,) * n_rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(index)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> Vector:
        return _unpack(self.rows[i], self.n_cols)

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.n_rows)]

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return BitMatrix(self.n_rows, self.n_cols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.n_cols != other.n_rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for word in self.rows:
            acc = 0
            while word:
                low = word & -word
                acc ^= other.rows[low.bit_length() - 1]
                word ^= low
            out.append(acc)
        return BitMatrix(self.n_rows, other.n_cols, tuple(out))

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.n_cols
        for i, word in enumerate(self.rows):
            while word:
                low = word & -word
                cols[low.bit_length() - 1] |= 1 << i
                word ^= low
        return BitMatrix(self.n_cols, self.n_rows, tuple(cols))

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    def apply(self, v: Sequence[int]) -> Vector:
        """Column action ``m @ v``."""
        if len(v) != self.n_cols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        x = _pack(v)
        return tuple(bin(word & x).count("1") & 1 for word in self.rows)

    def act_on_row(self, v: Sequence[int]) -> Vector:
        """Row action ``v @ m``."""
        if len(v) != self.n_rows:
            raise DimensionError(f"row vector of length {len(v)} for {self.shape} matrix")
        acc = 0
        for i, b in enumerate(v):
            if b:
                acc ^= self.rows[i]
        return _unpack(acc, self.n_cols)

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in self.row(i)) for i in range(self.n_rows))

    # JSON matrix format: {"size": 2g, "rows": ["0101...", ...]}, character 0 is column 0.

    def to_json_obj(self) -> dict:
        if not self.is_square:
            raise DimensionError("only square matrices have a JSON form")
        return {"size": self.n_rows, "rows": ["".join(str(b) for b in self.row(i)) for i in range(self.n_rows)]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BitMatrix":
        try:
            size = obj["size"]
            rows = obj["rows"]
        except (KeyError, TypeError) as exc:
            raise MatrixFormatError("matrix JSON needs 'size' and 'rows'") from exc
        if not isinstance(size, int) or isinstance(size, bool) or size < 0:
            raise MatrixFormatError(f"bad size {size!r}")
        if not isinstance(rows, list) or len(rows) != size:
            raise MatrixFormatError(f"expected {size} rows")
        entries = []
        for k, text in enumerate(rows):
            if not isinstance(text, str) or len(text) != size:
                raise MatrixFormatError(f"row {k} must be a bitstring of length {size}")
            if set(text) - {"0", "1"}:
                raise MatrixFormatError(f"row {k} has characters outside {{0,1}}")
            entries.append([int(ch) for ch in text])
        return cls.from_lists(entries, size)

    @classmethod
    def loads(cls, text: str) -> "BitMatrix":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def _echelon(words: Iterable[int]) -> tuple[list[int], list[int], list[int]]:
    """Forward elimination with leftmost pivot, topmost row preference.

    Returns (reduced rows, pivot columns, indices of the input rows that
    contributed a pivot).
    """
    basis: list[int] = []
    pivots: list[int] = []
    used: list[int] = []
    for idx, word in enumerate(words):
        for b, p in zip(basis, pivots):
            if (word >> p) & 1:
                word ^= b
        if word:
            p = _lowbit(word)
            for k, b in enumerate(basis):
                if (b >> p) & 1:
                    basis[k] = b ^ word
            basis.append(word)
            pivots.append(p)
            used.append(idx)
    return basis, pivots, used


def rank(m: BitMatrix) -> int:
    return len(_echelon(m.rows)[0])


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form and pivot columns, pivots sorted left to right."""
    basis, pivots, _ = _echelon(m.rows)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    rows = [basis[k] for k in order] + [0] * (m.n_rows - len(basis))
    return BitMatrix(m.n_rows, m.n_cols, tuple(rows)), [pivots[k] for k in order]


def kernel_basis(m: BitMatrix) -> list[Vector]:
    """Basis of ``{x : m @ x = 0}``, one vector per free column in increasing order."""
    basis, pivots, _ = _echelon(m.rows)
    pivot_of = dict(zip(pivots, basis))
    out = []
    for f in range(m.n_cols):
        if f in pivot_of:
            continue
        x = 1 << f
        for p, b in pivot_of.items():
            if (b >> f) & 1:
                x |= 1 << p
        out.append(_unpack(x, m.n_cols))
    return out


def image_basis(m: BitMatrix) -> list[Vector]:
    """Basis of the column space: the pivot columns of ``m`` in increasing order."""
    t = m.transpose()
    _, _, used = _echelon(t.rows)
    return [t.row(i) for i in used]


def solve(m: BitMatrix, v: Sequence[int]) -> Vector | None:
    """Some ``x`` with ``m @ x = v``, or ``None`` if ``v`` is not in the image."""
    if len(v) != m.n_rows:
        raise DimensionError(f"right-hand side of length {len(v)} for {m.shape} matrix")
    aug_bit = 1 << m.n_cols
    words = [word | (aug_bit if b else 0) for word, b in zip(m.rows, v)]
    basis, pivots, _ = _echelon(words)
    x = 0
    for b, p in zip(basis, pivots):
        if p == m.n_cols:
            return None
        if b & aug_bit:
            x |= 1 << p
    return _unpack(x, m.n_cols)


def inverse(m: BitMatrix) -> BitMatrix:
    if not m.is_square:
        raise DimensionError("inverse of a non-square matrix")
    n = m.n_rows
    words = [word | (1 << (n + i)) for i, word in enumerate(m.rows)]
    basis, pivots, _ = _echelon(words)
    if len(basis) != n or any(p >= n for p in pivots):
        raise ZeroDivisionError("matrix is singular over GF(2)")
    by_pivot = dict(zip(pivots, basis))
    mask = (1 << n) - 1
    return BitMatrix(n, n, tuple((by_pivot[i] >> n) & mask for i in range(n)))


def is_invertible(m: BitMatrix) -> bool:
    return m.is_square and rank(m) == m.n_rows


def is_involution(m: BitMatrix) -> bool:
    if not m.is_square:
        raise DimensionError("involution check needs a square matrix")
    return m @ m == BitMatrix.identity(m.n_rows)


def _require_involution(s: BitMatrix) -> int:
    if not s.is_square or s.n_rows % 2:
        raise DimensionError(f"involution must be square of even size, got {s.shape}")
    if not is_involution(s):
        raise NotInvolutionError("matrix does not square to the identity")
    return s.n_rows // 2


def dickson_invariant(s: BitMatrix) -> int:
    """Rank of ``s + Id`` for an involution ``s``."""
    _require_involution(s)
    return rank(s + BitMatrix.identity(s.n_rows))


def normal_form_matrix(g: int, s: int) -> BitMatrix:
    """``Id_{2g-2s}`` followed by ``s`` blocks ``[[1,1],[0,1]]`` on the diagonal."""
    if g < 0 or not 0 <= s <= g:
        raise ValueError(f"need 0 <= s <= g, got g={g}, s={s}")
    n = 2 * g
    rows = [1 << i for i in range(n)]
    for blk in range(s):
        i = 2 * (g - s) + 2 * blk
        rows[i] |= 1 << (i + 1)
    return BitMatrix(n, n, tuple(rows))


@dataclass(frozen=True)
class AdaptedBasis:
    g: int
    dickson: int
    n_pairs: int
    change_of_basis: BitMatrix
    roles: tuple[tuple[str, int], ...]

    def vectors(self, tag: str) -> list[Vector]:
        return [self.change_of_basis.row(k) for k, (t, _) in enumerate(self.roles) if t == tag]

    def to_json_obj(self) -> dict:
        return {
            "g": self.g,
            "dickson": self.dickson,
            "n_pairs": self.n_pairs,
            "change_of_basis": self.change_of_basis.to_json_obj(),
            "roles": [f"{t}_{i}" for t, i in self.roles],
        }


def adapted_basis(s: BitMatrix) -> AdaptedBasis:
    """Basis ``(beta_i, gamma_i)..., (A_i, alpha_i)...`` putting ``s`` in normal form.

    The alpha_i span the image of ``v -> v @ (s + Id)`` and are chosen as the
    topmost independent rows of ``s + Id``; A_i is the matching standard basis
    vector, so ``A_i @ (s + Id) = alpha_i``.  The alpha_i are completed to a
    basis of the kernel by the kernel vectors of lowest free index, tagged
    beta/gamma alternately.
    """
    g = _require_involution(s)
    n = 2 * g
    nil = s + BitMatrix.identity(n)

    _, _, used = _echelon(nil.rows)
    alphas = [nil.rows[i] for i in used]
    a_vecs = [1 << i for i in used]
    d = len(alphas)

    # left kernel of nil == column kernel of its transpose
    kernel = [_pack(v) for v in kernel_basis(nil.transpose())]
    span, _, _ = _echelon(alphas)
    completion: list[int] = []
    for cand in kernel:
        if len(completion) == n - 2 * d:
            break
        trial, _, _ = _echelon(span + [cand])
        if len(trial) > len(span):
            span = trial
            completion.append(cand)
    if len(completion) != n - 2 * d:
        raise ArithmeticError("kernel too small; image is not contained in kernel")

    rows: list[int] = []
    roles: list[tuple[str, int]] = []
    for k in range(0, len(completion), 2):
        rows += [completion[k], completion[k + 1]]
        roles += [("beta", k // 2 + 1), ("gamma", k // 2 + 1)]
    for k in range(d):
        rows += [a_vecs[k], alphas[k]]
        roles += [("A", k + 1), ("alpha", k + 1)]
    change = BitMatrix(n, n, tuple(rows))
    return AdaptedBasis(g, d, g - d, change, tuple(roles))
