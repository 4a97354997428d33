from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from stringzeta.polynomial import (
    IntegerPolynomial, count_roots, numeric_roots, smallest_positive_root, spectral_radius,
    squarefree_part, sturm_sequence,
)

t = sympy.symbols("t")
P = IntegerPolynomial


def to_sympy(p):
    return sum(c * t ** i for i, c in enumerate(p.coefficients))


def test_arithmetic():
    a, b = P([1, -1]), P([1, 1])
    assert a * b == P([1, 0, -1])
    assert a + b == 2
    assert (a - a).is_zero() and (a - a).degree == -1
    assert a ** 3 == P([1, -3, 3, -1])
    assert P([1, 0, -1])(3) == -8
    assert P([5, 0, 3]).derivative() == P([0, 6])


def test_pretty():
    assert P([1, 0, -2, -2, 1, 2, 1]).pretty() == "1 − 2t² − 2t³ + t⁴ + 2t⁵ + t⁶"
    assert P([1, 0, -2, -2, 1, 2, 1]).ascii() == "1 - 2t^2 - 2t^3 + t^4 + 2t^5 + t^6"
    assert P([0]).pretty() == "0"
    assert P([-1, 1]).pretty() == "−1 + t"


def test_rejects_non_integers():
    with pytest.raises(ValueError):
        P([1, 0.5])


def test_squarefree_part():
    assert squarefree_part(P([1, 0, -1]) ** 2) == P([1, 0, -1])
    assert squarefree_part(P([1, 0, -1, -1]) ** 2) == P([1, 0, -1, -1])


def test_gp23_radius():
    r = spectral_radius(P([1, 0, -1, -1]) ** 2)
    assert not r.exact and r.error_bound < 1e-11
    exact = float(1 / sympy.real_roots(1 - t ** 2 - t ** 3)[0].evalf(40))
    assert abs(r.radius - exact) < 1e-12


def test_exact_rational_roots():
    r = spectral_radius(P([1, 0, -1]) ** 2)
    assert r == (1.0, 0.0, True)
    root, width = smallest_positive_root(P([1, -3, 2]))   # (1-t)(1-2t)
    assert root == Fraction(1, 2) and width == 0.0


def test_no_positive_root():
    assert spectral_radius(P([1])) == (0.0, 0.0, True)
    assert spectral_radius(P([1, 1])).radius == 0.0


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_sturm_count_matches_sympy(coeffs):
    p = P(coeffs)
    q = squarefree_part(p)
    if q.degree <= 0:
        return
    expected = len([r for r in sympy.real_roots(to_sympy(q)) if 0 < r <= 10])
    assert count_roots(sturm_sequence(q), Fraction(0), Fraction(10)) == expected


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6).filter(any))
def test_smallest_positive_root_matches_sympy(coeffs):
    p = P([1] + coeffs)
    roots = sorted(r for r in sympy.real_roots(to_sympy(p)) if r > 0)
    found = smallest_positive_root(p)
    if not roots:
        assert found is None
        return
    assert found is not None
    assert abs(float(found[0]) - float(roots[0].evalf(30))) < 1e-10


def test_numeric_roots():
    roots = sorted(numeric_roots(P([2, -3, 1])).real)
    assert roots == pytest.approx([1.0, 2.0])
