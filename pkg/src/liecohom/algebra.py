"""Lie algebras given by rational structure constants.

An algebra is stored as its dimension, basis names and the bracket table
``{(i, j): coefficient vector}`` for 1 <= i < j <= n; antisymmetry is
implicit and the Jacobi identity is checked at construction time. All
indices facing the user are 1-based (matching the e_1 ... e_n notation),
coordinates are plain tuples of Fractions.

Every value is immutable after construction and every operation is a pure
function, so concurrent use needs no coordination.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import JacobiError, StructureError
from .linalg import (
    RationalMatrix,
    Vector,
    in_image,
    invert,
    kernel_basis,
    rank,
    span_basis,
    vec_add,
    vec_is_zero,
    vec_scale,
    vector,
    zero_vector,
)


@dataclass(frozen=True)
class OneForm:
    """Element of the dual space, as coefficients in the dual basis e^1..e^n."""

    coeffs: Vector

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", vector(coeffs))

    @classmethod
    def zero(cls, n: int) -> "OneForm":
        return cls(zero_vector(n))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return vec_is_zero(self.coeffs)

    def evaluate(self, v: Sequence) -> Fraction:
        """Pairing with a vector of the algebra."""
        return sum((a * Fraction(b) for a, b in zip(self.coeffs, v, strict=True)),
                   Fraction(0))

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(vec_add(self.coeffs, other.coeffs))

    def __neg__(self) -> "OneForm":
        return OneForm(vec_scale(-1, self.coeffs))

    def __sub__(self, other: "OneForm") -> "OneForm":
        return self + (-other)

    def scale(self, c) -> "OneForm":
        return OneForm(vec_scale(c, self.coeffs))


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n with a canonical (reduced echelon) basis.

    Two Subspace values are equal exactly when the subspaces coincide.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence]) -> "Subspace":
        return cls(ambient_dim, tuple(span_basis(vectors, ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        if self.dim == 0:
            return vec_is_zero(vector(v))
        m = RationalMatrix.from_columns([list(b) for b in self.basis])
        return in_image(m, vector(v)) is not None

    def is_zero(self) -> bool:
        return self.dim == 0


@dataclass(frozen=True)
class JacobiDefect:
    """One failing Jacobi triple: the cyclic sum over (i, j, k) is ``defect``."""

    triple: tuple[int, int, int]
    defect: Vector

    def __str__(self) -> str:
        parts = [f"{c}*e{m + 1}" for m, c in enumerate(self.defect) if c != 0]
        return f"jacobi defect on {self.triple}: " + " + ".join(parts)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    defects: tuple[JacobiDefect, ...] = ()

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "; ".join(str(d) for d in self.defects)


def _normalize_brackets(dim: int, brackets: Mapping) -> dict[tuple[int, int], Vector]:
    """Shape-check a raw bracket table and coerce coefficients to Fractions.

    Raises StructureError for anything malformed; this is deliberately
    separate from the Jacobi check so callers can tell the two apart.
    """
    if not isinstance(dim, int) or dim < 1:
        raise StructureError(f"dimension must be an integer >= 1, got {dim!r}")
    table: dict[tuple[int, int], Vector] = {}
    for key, coeffs in brackets.items():
        try:
            i, j = key
            i, j = int(i), int(j)
        except (TypeError, ValueError):
            raise StructureError(f"bracket key {key!r} is not an index pair") from None
        if not (1 <= i < j <= dim):
            raise StructureError(
                f"bracket indices ({i},{j}) must satisfy 1 <= i < j <= {dim}")
        try:
            v = vector(coeffs)
        except (TypeError, ValueError, ZeroDivisionError):
            raise StructureError(f"bracket ({i},{j}) has a non-rational coefficient") from None
        if len(v) != dim:
            raise StructureError(
                f"bracket ({i},{j}) has {len(v)} coefficients, expected {dim}")
        if not vec_is_zero(v):
            table[(i, j)] = v
    return table


class AlgebraClass(enum.Enum):
    ABELIAN = "abelian"
    NILPOTENT = "nilpotent"
    SOLVABLE = "solvable"
    NON_SOLVABLE = "non_solvable"


@dataclass(frozen=True, eq=True)
class LieAlgebra:
    """Validated Lie algebra; construct through :meth:`from_brackets`."""

    dim: int
    basis_names: tuple[str, ...]
    brackets: tuple[tuple[tuple[int, int], Vector], ...]
    _table: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        self._table.update(dict(self.brackets))

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping, names: Sequence[str] | None = None,
                      validate: bool = True) -> "LieAlgebra":
        """Build an algebra from a ``{(i, j): coeff vector}`` table.

        ``validate=False`` skips the Jacobi check; it exists for diagnostic
        work on deliberately broken tables (d squared is then nonzero) and
        should not appear in normal code.
        """
        table = _normalize_brackets(dim, brackets)
        if names is None:
            names = tuple(f"e{i}" for i in range(1, dim + 1))
        else:
            names = tuple(str(s) for s in names)
            if len(names) != dim:
                raise StructureError(f"expected {dim} basis names, got {len(names)}")
        if validate:
            report = _jacobi_report(dim, table)
            if not report.ok:
                raise JacobiError(report)
        return cls(dim, names, tuple(sorted(table.items())))

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for 1-based indices in any order."""
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise StructureError(f"basis index out of range: ({i},{j})")
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._table.get((i, j), zero_vector(self.dim))
        return vec_scale(-1, self._table.get((j, i), zero_vector(self.dim)))

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """[x, y] for coordinate vectors, by bilinearity."""
        x, y = vector(x), vector(y)
        out = zero_vector(self.dim)
        for i in range(self.dim):
            if x[i] == 0:
                continue
            for j in range(self.dim):
                c = x[i] * y[j]
                if c == 0 or i == j:
                    continue
                out = vec_add(out, vec_scale(c, self.bracket_basis(i + 1, j + 1)))
        return out

    def ad(self, x: Sequence) -> RationalMatrix:
        """Matrix of ad(x): columns are [x, e_j] in basis coordinates."""
        cols = [self.bracket(x, _unit(self.dim, j)) for j in range(self.dim)]
        return RationalMatrix.from_columns([list(c) for c in cols])

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        """C_ij^k with 1-based indices."""
        return self.bracket_basis(i, j)[k - 1]


def _unit(n: int, j: int) -> Vector:
    v = [Fraction(0)] * n
    v[j] = Fraction(1)
    return tuple(v)


def _jacobi_report(dim: int, table: Mapping[tuple[int, int], Vector]) -> ValidationReport:
    def bb(i: int, j: int) -> Vector:
        if i == j:
            return zero_vector(dim)
        if i < j:
            return table.get((i, j), zero_vector(dim))
        return vec_scale(-1, table.get((j, i), zero_vector(dim)))

    def bv(x: Vector, j: int) -> Vector:
        out = zero_vector(dim)
        for m in range(dim):
            if x[m] != 0:
                out = vec_add(out, vec_scale(x[m], bb(m + 1, j)))
        return out

    defects = []
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            for k in range(j + 1, dim + 1):
                total = vec_add(vec_add(bv(bb(i, j), k), bv(bb(j, k), i)),
                                bv(bb(k, i), j))
                if not vec_is_zero(total):
                    defects.append(JacobiDefect((i, j, k), total))
    return ValidationReport(ok=not defects, defects=tuple(defects))


def validate_lie_algebra(dim: int, brackets: Mapping) -> ValidationReport:
    """Check a raw structure-constant table against the Jacobi identity.

    Malformed tables raise StructureError; Jacobi failures are reported
    exhaustively in the returned report, one entry per bad triple, which is
    friendlier than fail-fast when authoring a new algebra.
    """
    table = _normalize_brackets(dim, brackets)
    return _jacobi_report(dim, table)


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    """Span of all bracket values [g, g]."""
    return Subspace.span(g.dim, [v for _, v in g.brackets])


def closed_one_forms(g: LieAlgebra) -> Subspace:
    """Annihilator of [g, g] inside the dual space.

    A one-form is closed exactly when it kills every bracket, so this space
    has dimension n - dim [g, g] = b1.
    """
    der = derived_subalgebra(g)
    if der.dim == 0:
        return Subspace.span(g.dim, [_unit(g.dim, j) for j in range(g.dim)])
    m = RationalMatrix.from_rows([list(b) for b in der.basis])
    return Subspace.span(g.dim, [list(v) for v in kernel_basis(m)])


def _bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [g.bracket(x, y) for x in a.basis for y in b.basis]
    return Subspace.span(g.dim, [list(v) for v in vecs])


def classify(g: LieAlgebra) -> AlgebraClass:
    """Most specific of abelian / nilpotent / solvable / non_solvable.

    Nilpotency is decided by the lower central series, solvability by the
    derived series; abelian algebras are exactly those with an empty bracket
    table.
    """
    if not g.brackets:
        return AlgebraClass.ABELIAN
    full = Subspace.span(g.dim, [_unit(g.dim, j) for j in range(g.dim)])

    term = derived_subalgebra(g)
    while True:
        nxt = _bracket_span(g, full, term)
        if nxt.dim == term.dim:
            break
        term = nxt
    if term.dim == 0:
        return AlgebraClass.NILPOTENT

    term = derived_subalgebra(g)
    while True:
        nxt = _bracket_span(g, term, term)
        if nxt.dim == term.dim:
            break
        term = nxt
    if term.dim == 0:
        return AlgebraClass.SOLVABLE
    return AlgebraClass.NON_SOLVABLE


def is_solvable(g: LieAlgebra) -> bool:
    return classify(g) is not AlgebraClass.NON_SOLVABLE


def is_unimodular(g: LieAlgebra) -> bool:
    """True when trace(ad e_i) = 0 for every basis vector."""
    return all(g.ad(_unit(g.dim, j)).trace() == 0 for j in range(g.dim))


def change_basis(g: LieAlgebra, m: RationalMatrix) -> LieAlgebra:
    """Rewrite the algebra in the basis whose vectors are the columns of ``m``.

    Raises ValueError when ``m`` is singular. The result is re-validated,
    although Jacobi holds automatically (it is basis-independent).
    """
    if (m.rows, m.cols) != (g.dim, g.dim):
        raise ValueError(f"change of basis must be {g.dim}x{g.dim}")
    minv = invert(m)
    brackets = {}
    for a in range(1, g.dim + 1):
        for b in range(a + 1, g.dim + 1):
            old = g.bracket(m.column(a - 1), m.column(b - 1))
            new = minv.apply(old)
            if not vec_is_zero(new):
                brackets[(a, b)] = new
    return LieAlgebra.from_brackets(g.dim, brackets, names=g.basis_names)


def pullback_one_form(omega: OneForm, m: RationalMatrix) -> OneForm:
    """Coefficients of a one-form in the new basis given by the columns of ``m``.

    The j-th new coefficient is omega evaluated on the j-th new basis vector,
    i.e. the transpose of ``m`` applied to the old coefficients.
    """
    return OneForm(m.transpose().apply(omega.coeffs))


def random_invertible(n: int, rng, lo: int = -3, hi: int = 3) -> RationalMatrix:
    """Random invertible integer matrix; used by tests for basis changes."""
    while True:
        m = RationalMatrix(n, n, [[rng.randint(lo, hi) for _ in range(n)]
                                  for _ in range(n)])
        if rank(m) == n:
            return m
