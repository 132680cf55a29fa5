"""Exterior algebra of the dual space and its differentials.

Forms are stored sparsely: a map from strictly increasing 1-based index
tuples to nonzero rational coefficients. The basis of each graded piece is
ordered lexicographically, which fixes every matrix layout once and for all.

Two differentials live here. The plain one acts on generators by

    d e^k = - sum_{i<j} C_ij^k e^i ^ e^j

and extends by the graded Leibniz rule; it squares to zero exactly when the
Jacobi identity holds. The twisted differential adds a wedge with a closed
one-form, d_w = d + w ^ . ; closedness of w is a hard precondition because
d_w fails to square to zero otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .algebra import LieAlgebra, OneForm
from .errors import NonClosedFormError
from .linalg import RationalMatrix, Vector


def sort_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Sorted tuple and permutation sign, or None when an index repeats."""
    seq = list(indices)
    sign = 1
    # insertion sort; counts transpositions, fine at these sizes
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and seq[j - 1] == seq[j]:
            return None
    return tuple(seq), sign


class ExteriorForm:
    """Homogeneous element of the exterior algebra on e^1 .. e^n."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.dim = dim
        self.degree = degree
        clean: dict[tuple[int, ...], Fraction] = {}
        for idx, c in (terms or {}).items():
            idx = tuple(int(i) for i in idx)
            c = Fraction(c)
            if c == 0:
                continue
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} does not match degree {degree}")
            if any(not 1 <= i <= dim for i in idx):
                raise ValueError(f"index out of range in {idx}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index tuple {idx} is not strictly increasing")
            clean[idx] = c
        self.terms = clean

    @classmethod
    def zero(cls, dim: int, degree: int) -> "ExteriorForm":
        return cls(dim, degree)

    @classmethod
    def scalar(cls, dim: int, value) -> "ExteriorForm":
        return cls(dim, 0, {(): Fraction(value)})

    @classmethod
    def basis(cls, dim: int, indices: Sequence[int]) -> "ExteriorForm":
        """The basis form e^{i_1} ^ ... ^ e^{i_p} for increasing indices."""
        return cls(dim, len(indices), {tuple(indices): Fraction(1)})

    @classmethod
    def from_one_form(cls, omega: OneForm) -> "ExteriorForm":
        return cls(omega.dim, 1,
                   {(i + 1,): c for i, c in enumerate(omega.coeffs) if c != 0})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(indices), Fraction(0))

    def __add__(self, other: "ExteriorForm") -> "ExteriorForm":
        if (self.dim, self.degree) != (other.dim, other.degree):
            raise ValueError("cannot add forms of different dimension or degree")
        out = dict(self.terms)
        for idx, c in other.terms.items():
            out[idx] = out.get(idx, Fraction(0)) + c
        return ExteriorForm(self.dim, self.degree, out)

    def __neg__(self) -> "ExteriorForm":
        return self.scale(-1)

    def __sub__(self, other: "ExteriorForm") -> "ExteriorForm":
        return self + (-other)

    def scale(self, c) -> "ExteriorForm":
        c = Fraction(c)
        return ExteriorForm(self.dim, self.degree,
                            {idx: c * v for idx, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return (self.dim, self.degree, self.terms) == (other.dim, other.degree, other.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"ExteriorForm({self.dim}, {self.degree}, 0)"
        parts = []
        for idx in sorted(self.terms):
            mono = "^".join(f"e{i}" for i in idx) if idx else "1"
            parts.append(f"{self.terms[idx]}*{mono}")
        return "ExteriorForm(" + " + ".join(parts) + ")"


def wedge(a: ExteriorForm, b: ExteriorForm) -> ExteriorForm:
    """Graded-commutative product; a^b = (-1)^{deg a deg b} b^a.

    Degrees above the ambient dimension are allowed and give the zero form
    of the formal degree.
    """
    if a.dim != b.dim:
        raise ValueError("wedge of forms over different ambient dimensions")
    out: dict[tuple[int, ...], Fraction] = {}
    for ia, ca in a.terms.items():
        for ib, cb in b.terms.items():
            merged = sort_sign(ia + ib)
            if merged is None:
                continue
            idx, sign = merged
            c = out.get(idx, Fraction(0)) + sign * ca * cb
            if c == 0:
                out.pop(idx, None)
            else:
                out[idx] = c
    return ExteriorForm(a.dim, a.degree + b.degree, out)


def _generator_differentials(dim: int, brackets: Iterable[tuple[tuple[int, int], Vector]]):
    """d e^k as sparse 2-forms, one per generator, from the bracket table."""
    gens: list[dict[tuple[int, int], Fraction]] = [dict() for _ in range(dim)]
    for (i, j), coeffs in brackets:
        for k, c in enumerate(coeffs):
            if c != 0:
                gens[k][(i, j)] = -c
    return gens


def ce_differential(g: LieAlgebra, xi: ExteriorForm) -> ExteriorForm:
    """Chevalley-Eilenberg differential of a form, one degree up."""
    if xi.dim != g.dim:
        raise ValueError("form dimension does not match the algebra")
    gens = _generator_differentials(g.dim, g.brackets)
    out: dict[tuple[int, ...], Fraction] = {}
    for idx, c in xi.terms.items():
        for t, k in enumerate(idx):
            pos_sign = -1 if t % 2 else 1
            for (i, j), dc in gens[k - 1].items():
                merged = sort_sign(idx[:t] + (i, j) + idx[t + 1:])
                if merged is None:
                    continue
                new_idx, sign = merged
                val = out.get(new_idx, Fraction(0)) + pos_sign * sign * c * dc
                if val == 0:
                    out.pop(new_idx, None)
                else:
                    out[new_idx] = val
    return ExteriorForm(g.dim, xi.degree + 1, out)


def is_closed(g: LieAlgebra, omega: OneForm) -> bool:
    """Whether d omega = 0, i.e. omega kills every bracket."""
    return all(omega.evaluate(v) == 0 for _, v in g.brackets)


def _require_closed(g: LieAlgebra, omega: OneForm) -> None:
    if omega.dim != g.dim:
        raise ValueError("one-form length does not match the algebra dimension")
    if not is_closed(g, omega):
        raise NonClosedFormError(
            "twisting one-form is not closed; the deformed differential would "
            "not square to zero")


def deformed_differential(g: LieAlgebra, omega: OneForm, xi: ExteriorForm) -> ExteriorForm:
    """d_w(xi) = d(xi) + w ^ xi for a closed one-form w."""
    _require_closed(g, omega)
    return ce_differential(g, xi) + wedge(ExteriorForm.from_one_form(omega), xi)


def form_basis(n: int, p: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered index tuples spanning degree p."""
    return list(combinations(range(1, n + 1), p))


def form_to_coords(xi: ExteriorForm) -> Vector:
    basis = form_basis(xi.dim, xi.degree)
    return tuple(xi.terms.get(idx, Fraction(0)) for idx in basis)


def coords_to_form(n: int, p: int, coords: Sequence) -> ExteriorForm:
    basis = form_basis(n, p)
    if len(coords) != len(basis):
        raise ValueError("coordinate length does not match the graded dimension")
    return ExteriorForm(n, p, {idx: Fraction(c) for idx, c in zip(basis, coords)})


@dataclass(frozen=True)
class DifferentialMatrices:
    """Degree-by-degree matrices of d_w in the lexicographic bases.

    ``matrices[p]`` maps degree p to degree p+1 and has binomial(n, p+1)
    rows by binomial(n, p) columns, for p = 0 .. n-1.
    """

    algebra: LieAlgebra
    omega: OneForm
    matrices: tuple[RationalMatrix, ...]

    def matrix(self, p: int) -> RationalMatrix:
        n = self.algebra.dim
        if not 0 <= p <= n:
            raise ValueError(f"degree {p} out of range 0..{n}")
        if p == n:
            # top degree maps to the zero space
            return RationalMatrix(0, 1)
        return self.matrices[p]


def differential_matrices(g: LieAlgebra, omega: OneForm) -> DifferentialMatrices:
    """Materialize d_w on every degree; requires d omega = 0."""
    _require_closed(g, omega)
    n = g.dim
    mats = []
    for p in range(n):
        source = form_basis(n, p)
        target_index = {idx: r for r, idx in enumerate(form_basis(n, p + 1))}
        rows = [[Fraction(0)] * len(source) for _ in target_index]
        for col, idx in enumerate(source):
            image = deformed_differential(g, omega, ExteriorForm.basis(n, idx))
            for t_idx, c in image.terms.items():
                rows[target_index[t_idx]][col] = c
        mats.append(RationalMatrix(len(target_index), len(source), rows))
    return DifferentialMatrices(g, omega, tuple(mats))
