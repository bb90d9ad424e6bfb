"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` throughout; no floats ever enter a
computation.  ``str(Fraction)`` already produces the wire format used by the
rest of the package (``"a/b"``, or ``"a"`` when the denominator is 1), and
``Fraction(text)`` parses it back, so no extra (de)serialisation layer is
needed for scalars.

The row reduction here is deliberately boring: dense matrices, leftmost
nonzero pivot, no pivot-size heuristics.  That makes :func:`rref`,
:func:`rank` and :func:`kernel_basis` fully deterministic, which the callers
rely on (kernel vectors are compared against frozen expected values and
emitted byte-identically in reports).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

Vector = tuple[Fraction, ...]


def as_fraction(x) -> Fraction:
    """Coerce to Fraction, refusing floats (which would smuggle in rounding)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact computations: %r" % (x,))
    return Fraction(x)




class QMatrix:
    """A dense matrix of Fractions with a fixed rectangular shape.

    Instances are immutable; all operations return new matrices.
    ``cols`` must be given explicitly when constructing a matrix with zero
    rows, since the column count cannot be inferred from an empty row list.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Sequence], cols: int | None = None):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in entries)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows: all rows must have equal length")
            if cols is not None and cols != ncols:
                raise ValueError("cols=%d disagrees with row length %d" % (cols, ncols))
        else:
            if cols is None:
                raise ValueError("a matrix with zero rows needs an explicit cols=")
            ncols = cols
        self.rows = len(rows)
        self.cols = ncols
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return "QMatrix(%d x %d)" % (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "QMatrix":
        return QMatrix(zip(*self.entries), cols=self.rows) if self.rows else QMatrix(
            [[] for _ in range(self.cols)], cols=0
        )

    def mul_vec(self, v: Sequence) -> Vector:
        """Matrix-vector product; ``v`` must have length ``self.cols``."""
        vec = tuple(as_fraction(x) for x in v)
        if len(vec) != self.cols:
            raise ValueError("vector length %d != cols %d" % (len(vec), self.cols))
        return tuple(sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in self.entries)

    def matmul(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %r @ %r" % (self, other))
        out = [
            [
                sum((row[k] * other.entries[k][j] for k in range(self.cols)), Fraction(0))
                for j in range(other.cols)
            ]
            for row in self.entries
        ]
        return QMatrix(out, cols=other.cols)

    # -- serialisation ----------------------------------------------------

    def to_strings(self) -> list[list[str]]:
        """Entries as rational strings (``"a/b"`` / ``"a"``), row-major."""
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_strings(cls, data: Sequence[Sequence[str]], cols: int | None = None) -> "QMatrix":
        return cls([[Fraction(s) for s in row] for row in data], cols=cols)


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the tuple of pivot column indices.

    Deterministic policy: scan columns left to right, take the first row at or
    below the current one with a nonzero entry, swap it up, scale the pivot to
    1 and clear the whole column.
    """
    work = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        sel = next((i for i in range(r, m.rows) if work[i][c] != 0), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(m.rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return QMatrix(work, cols=m.cols), tuple(pivots)


def rank(m: QMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: QMatrix) -> list[Vector]:
    """Canonical basis of ``{v : m @ v = 0}``.

    One vector per free (non-pivot) column, in ascending column order: the
    free coordinate is set to 1, the other free coordinates to 0, and the
    pivot coordinates are filled by back substitution from the RREF.  With
    this normalisation the basis is unique, so results can be compared and
    serialised verbatim.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis: list[Vector] = []
    for f in free_cols:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced.entries[r][f]
        basis.append(tuple(v))
    # rank-nullity, checked on every call: cheap and catches bookkeeping bugs
    if len(pivots) + len(basis) != m.cols:
        raise AssertionError("rank-nullity violated: %d + %d != %d" % (len(pivots), len(basis), m.cols))
    return basis
