"""Exact sparse linear algebra over Q.

Rank and kernel go through fraction-free (Bareiss) elimination on integer
rows; span/membership questions use an incremental echelon basis over
Fractions. The two code paths are independent, which the test-suite exploits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Vector = Dict[int, Fraction]

__all__ = [
    "ImageNotInKernel",
    "RatMatrix",
    "KernelBasis",
    "Span",
    "bareiss_echelon",
    "rank",
    "kernel",
    "membership",
    "quotient_dim",
    "complement_basis",
]


class ImageNotInKernel(ArithmeticError):
    """An image vector is not annihilated by the next map (d o d != 0)."""


def _clean(v: Mapping[int, object]) -> Vector:
    out = {}
    for k, c in v.items():
        c = Fraction(c)
        if c:
            out[k] = c
    return out


class RatMatrix:
    """Immutable sparse rows x cols matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], object]] = None):
        self.rows = rows
        self.cols = cols
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry {(r, c)} outside {rows}x{cols}")
            v = Fraction(v)
            if v:
                clean[(r, c)] = v
        self._entries = clean

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, object]]) -> "RatMatrix":
        entries = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                entries[(r, c)] = v
        return cls(rows, len(columns), entries)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]]) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, {(r, c): v for r, row in enumerate(data) for c, v in enumerate(row)})

    @property
    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, rc: Tuple[int, int]) -> Fraction:
        return self._entries.get(rc, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def column(self, c: int) -> Vector:
        return {r: v for (r, cc), v in self._entries.items() if cc == c}

    def columns(self) -> List[Vector]:
        out: List[Vector] = [{} for _ in range(self.cols)]
        for (r, c), v in self._entries.items():
            out[c][r] = v
        return out

    def dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def apply(self, v: Mapping[int, object]) -> Vector:
        out: Dict[int, Fraction] = {}
        for (r, c), a in self._entries.items():
            x = v.get(c)
            if x:
                out[r] = out.get(r, 0) + a * x
        return _clean(out)


@dataclass(frozen=True)
class KernelBasis:
    vectors: Tuple[Vector, ...]
    cols: int

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def _integer_rows(M: RatMatrix) -> List[List[int]]:
    dense = M.dense()
    out = []
    for row in dense:
        m = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * m) for v in row])
    return out


def bareiss_echelon(M: RatMatrix) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form.

    Pivots are taken column by column, on the first remaining row with a
    nonzero entry. Returns the integer echelon rows and the pivot columns.
    """
    A = _integer_rows(M)
    m, ncols = M.rows, M.cols
    prev = 1
    r = 0
    pivots: List[int] = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        if p != r:
            A[p], A[r] = A[r], A[p]
        piv_row = A[r]
        pv = piv_row[c]
        for i in range(r + 1, m):
            row = A[i]
            f = row[c]
            for j in range(c + 1, ncols):
                q, rem = divmod(pv * row[j] - f * piv_row[j], prev)
                assert rem == 0, "Bareiss division must be exact"
                row[j] = q
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M: RatMatrix) -> int:
    if M.rows == 0 or M.cols == 0 or not M.nnz:
        return 0
    return len(bareiss_echelon(M)[1])


def kernel(M: RatMatrix) -> KernelBasis:
    """Kernel basis with one vector per free column (that coordinate = 1, other free ones = 0)."""
    if M.rows == 0 or not M.nnz:
        return KernelBasis(tuple({c: Fraction(1)} for c in range(M.cols)), M.cols)
    E, pivots = bareiss_echelon(M)
    pivot_set = set(pivots)
    out = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        x: Dict[int, Fraction] = {free: Fraction(1)}
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            row = E[k]
            s = sum((row[j] * x[j] for j in x if j > pc), Fraction(0))
            if s:
                x[pc] = -s / row[pc]
        out.append(_clean(x))
    return KernelBasis(tuple(out), M.cols)


@dataclass
class Span:
    """Incrementally grown subspace, kept as an echelon basis with unit pivots."""

    rows: Dict[int, Vector] = field(default_factory=dict)  # pivot index -> row

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Mapping[int, object]) -> Vector:
        w = _clean(v)
        # rows are fully reduced (zero at every other pivot), so order is irrelevant
        for p in self.rows:
            c = w.get(p)
            if c:
                for k, a in self.rows[p].items():
                    t = w.get(k, 0) - c * a
                    if t:
                        w[k] = t
                    else:
                        w.pop(k, None)
        return w

    def contains(self, v: Mapping[int, object]) -> bool:
        return not self.reduce(v)

    def add(self, v: Mapping[int, object]) -> bool:
        """Add ``v``; returns False when it was already in the span."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = 1 / w[p]
        w = {k: a * inv for k, a in w.items()}
        # keep existing rows zero at the new pivot
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for k, a in w.items():
                    t = row.get(k, 0) - c * a
                    if t:
                        row[k] = t
                    else:
                        row.pop(k, None)
        self.rows[p] = w
        return True

    @classmethod
    def of(cls, vectors: Iterable[Mapping[int, object]]) -> "Span":
        s = cls()
        for v in vectors:
            s.add(v)
        return s


def membership(v: Mapping[int, object], image: Iterable[Mapping[int, object]]) -> bool:
    """True iff ``v`` is a rational combination of the ``image`` vectors."""
    return Span.of(image).contains(v)


def _check_image(kern: KernelBasis, image: Sequence[Mapping[int, object]]) -> Span:
    ks = Span.of(kern.vectors)
    for idx, col in enumerate(image):
        if not ks.contains(col):
            raise ImageNotInKernel(f"image vector #{idx} is not in the kernel span")
    return ks


def quotient_dim(kern: KernelBasis, image: Sequence[Mapping[int, object]]) -> int:
    _check_image(kern, image)
    return len(kern) - len(Span.of(image))


def complement_basis(kern: KernelBasis, image: Sequence[Mapping[int, object]]) -> List[Vector]:
    """Kernel vectors (in kernel order) that are independent modulo the image."""
    _check_image(kern, image)
    span = Span.of(image)
    return [dict(v) for v in kern.vectors if span.add(v)]
