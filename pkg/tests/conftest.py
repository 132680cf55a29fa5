from fractions import Fraction

import pytest

from liecohom import LieAlgebra, OneForm, load_example


@pytest.fixture
def heisenberg3():
    return load_example("heisenberg3").algebra


@pytest.fixture
def sol3():
    return load_example("sol3", k=1).algebra


@pytest.fixture
def euclid3():
    return load_example("euclid3").algebra


@pytest.fixture
def abelian2():
    return load_example("abelian", n=2).algebra


@pytest.fixture
def sl2():
    # [h,e] = 2e, [h,f] = -2f, [e,f] = h with basis order (h, e, f)
    return LieAlgebra.from_brackets(3, {
        (1, 2): (0, 2, 0),
        (1, 3): (0, 0, -2),
        (2, 3): (1, 0, 0),
    })


@pytest.fixture
def affine2():
    # the nonabelian 2-dimensional algebra [e1,e2] = e2
    return LieAlgebra.from_brackets(2, {(1, 2): (0, 1)})


def one_form(*coeffs) -> OneForm:
    return OneForm([Fraction(c) for c in coeffs])


def closed_grid(g, lo=-2, hi=2):
    """All closed one-forms with integer coefficients in [lo, hi]."""
    from itertools import product

    from liecohom import is_closed

    forms = []
    for coeffs in product(range(lo, hi + 1), repeat=g.dim):
        omega = one_form(*coeffs)
        if is_closed(g, omega):
            forms.append(omega)
    return forms
