"""Exact linear algebra over the rationals.

Everything here works with ``fractions.Fraction`` entries and never rounds.
Rank, kernels and linear solves go through fraction-free (Bareiss-style)
elimination on denominator-cleared integer rows, which keeps intermediate
entries at determinant size instead of letting numerators explode.

All pivot choices are "first nonzero in column order", so every function is
deterministic: the same matrix always yields the same kernel basis and the
same preimage, bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def vector(values: Iterable) -> Vector:
    """Coerce an iterable of rationals (ints, strings, Fractions) to a Vector."""
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


class RationalMatrix:
    """Dense matrix of exact rationals, row-major.

    Instances are treated as immutable; all operations return new matrices.
    """

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._rows = [[Fraction(0)] * cols for _ in range(rows)]
        else:
            if len(entries) != rows:
                raise ValueError(f"expected {rows} rows, got {len(entries)}")
            data = []
            for r in entries:
                r = [Fraction(x) for x in r]
                if len(r) != cols:
                    raise ValueError(f"expected {cols} columns, got {len(r)}")
                data.append(r)
            self._rows = data

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence]) -> "RationalMatrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows, cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RationalMatrix":
        cols = len(columns)
        rows = len(columns[0]) if cols else 0
        data = [[Fraction(columns[j][i]) for j in range(cols)] for i in range(rows)]
        return cls(rows, cols, data)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        m = cls(n, n)
        for i in range(n):
            m._rows[i][i] = Fraction(1)
        return m

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return tuple(self._rows[i])

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def to_rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              [[self._rows[i][j] for i in range(self.rows)]
                               for j in range(self.cols)])

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        v = [Fraction(x) for x in v]
        return tuple(sum((r[j] * v[j] for j in range(self.cols)), Fraction(0))
                     for r in self._rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        out = RationalMatrix(self.rows, other.cols)
        for i in range(self.rows):
            ri = self._rows[i]
            oi = out._rows[i]
            for k in range(self.cols):
                a = ri[k]
                if a == 0:
                    continue
                rk = other._rows[k]
                for j in range(other.cols):
                    oi[j] += a * rk[j]
        return out

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RationalMatrix(self.rows, self.cols,
                              [[a + b for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self._rows, other._rows)])

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix(self.rows, self.cols,
                              [[c * a for a in r] for r in self._rows])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self._rows for a in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._rows == other._rows

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def _cleared_rows(M: RationalMatrix, rhs: Sequence | None = None) -> list[list[int]]:
    """Integer rows obtained by clearing each row's denominators.

    Row scaling by a positive integer changes neither rank nor solution sets,
    so elimination on the cleared rows answers questions about ``M`` (and the
    augmented system when ``rhs`` is appended).
    """
    out = []
    for i in range(M.rows):
        row = list(M._rows[i])
        if rhs is not None:
            row.append(Fraction(rhs[i]))
        mult = lcm(*(q.denominator for q in row)) if row else 1
        out.append([int(q * mult) for q in row])
    return out


def _bareiss_echelon(rows: list[list[int]], width: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination in place.

    Returns the echelon rows and the list of pivot column indices (ascending).
    Every interior division is exact; a remainder would mean the Bareiss
    minor identity was violated, so it is asserted.
    """
    m = len(rows)
    pivots: list[int] = []
    piv_r = 0
    prev = 1
    for c in range(width):
        pivot_row = None
        for i in range(piv_r, m):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != piv_r:
            rows[piv_r], rows[pivot_row] = rows[pivot_row], rows[piv_r]
        p = rows[piv_r][c]
        for i in range(piv_r + 1, m):
            f = rows[i][c]
            ri, rp = rows[i], rows[piv_r]
            for j in range(c, width):
                num = p * ri[j] - f * rp[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "non-exact division in fraction-free elimination"
                ri[j] = q
        prev = p
        pivots.append(c)
        piv_r += 1
    return rows, pivots


def rank(M: RationalMatrix) -> int:
    """Rank over the rationals via fraction-free elimination."""
    _, pivots = _bareiss_echelon(_cleared_rows(M), M.cols)
    return len(pivots)


def kernel_basis(M: RationalMatrix) -> list[Vector]:
    """Deterministic basis of the right null space.

    One basis vector per free column, in ascending column order; the free
    coordinate is set to 1 and pivot coordinates are back-substituted, so
    ``M @ v == 0`` holds exactly for every returned ``v``.
    """
    ech, pivots = _bareiss_echelon(_cleared_rows(M), M.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * M.cols
        x[free] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = sum((ech[r][j] * x[j] for j in range(c + 1, M.cols)), Fraction(0))
            x[c] = -s / ech[r][c]
        basis.append(tuple(x))
    return basis


def in_image(M: RationalMatrix, target: Sequence) -> Vector | None:
    """A preimage ``u`` with ``M u == target``, or None when none exists.

    The solution is the minimal pivot one: free variables are pinned to zero,
    which makes the choice deterministic.
    """
    if len(target) != M.rows:
        raise ValueError("target length does not match row count")
    ech, pivots = _bareiss_echelon(_cleared_rows(M, target), M.cols + 1)
    if any(c == M.cols for c in pivots):
        return None
    x = [Fraction(0)] * M.cols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = sum((ech[r][j] * x[j] for j in range(c + 1, M.cols)), Fraction(0))
        x[c] = (ech[r][M.cols] - s) / ech[r][c]
    return tuple(x)


def invert(M: RationalMatrix) -> RationalMatrix:
    """Inverse of a square matrix; raises ValueError if singular."""
    if M.rows != M.cols:
        raise ValueError("only square matrices can be inverted")
    n = M.rows
    a = M.to_rows()
    b = RationalMatrix.identity(n).to_rows()
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            raise ValueError("singular matrix")
        a[c], a[pivot_row] = a[pivot_row], a[c]
        b[c], b[pivot_row] = b[pivot_row], b[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        b[c] = [x / p for x in b[c]]
        for i in range(n):
            if i == c or a[i][c] == 0:
                continue
            f = a[i][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
            b[i] = [x - f * y for x, y in zip(b[i], b[c])]
    return RationalMatrix(n, n, b)


def span_basis(vectors: Iterable[Sequence], ambient: int) -> list[Vector]:
    """Canonical basis of the span: nonzero rows of the reduced row echelon form.

    Canonical means two spanning sets of the same subspace produce the same
    output, which makes subspace equality a plain list comparison.
    """
    rows = [[Fraction(x) for x in v] for v in vectors]
    for r in rows:
        if len(r) != ambient:
            raise ValueError("vector length does not match ambient dimension")
    piv_r = 0
    for c in range(ambient):
        pivot_row = None
        for i in range(piv_r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[piv_r], rows[pivot_row] = rows[pivot_row], rows[piv_r]
        p = rows[piv_r][c]
        rows[piv_r] = [x / p for x in rows[piv_r]]
        for i in range(len(rows)):
            if i == piv_r or rows[i][c] == 0:
                continue
            f = rows[i][c]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[piv_r])]
        piv_r += 1
    return [tuple(r) for r in rows[:piv_r]]


def extend_independent(base: list[Vector], candidates: Iterable[Sequence], ambient: int,
                       limit: int | None = None) -> list[Vector]:
    """Candidates that enlarge the span of ``base``, scanned in order.

    Stops after ``limit`` additions when given. The returned vectors are the
    candidates themselves (not canonicalized), in scan order.
    """
    picked: list[Vector] = []
    current = rank(RationalMatrix.from_rows([list(v) for v in base])) if base else 0
    stack = [list(v) for v in base]
    for cand in candidates:
        if limit is not None and len(picked) >= limit:
            break
        trial = stack + [[Fraction(x) for x in cand]]
        r = rank(RationalMatrix(len(trial), ambient, trial))
        if r > current:
            picked.append(tuple(Fraction(x) for x in cand))
            stack = trial
            current = r
    return picked
