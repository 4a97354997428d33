import math

import pytest
import sympy
from hypothesis import given, settings

from stringzeta.analytics import (
    DOMESTIC, NON_DOMESTIC, ArithmeticTables, band_count_pi, classify, counting_report, divisors,
    eigenvalue_report, euler_product_coefficients, exp_log_coefficients, mobius, mu_from_N,
    mu_from_pi, mu_series_coefficients, peripheral_sum, pnt_constants, pnt_ratio_table,
    radius_of_convergence, series_inverse, spectral_radius, totient, zeta_coefficients,
)
from stringzeta.errors import InternalConsistencyError, PreconditionError
from stringzeta.polynomial import IntegerPolynomial
from stringzeta.presentation import Presentation, Quiver, validate_string_algebra
from stringzeta.state_graph import (
    BigIntSequence, adjacency, build_state_graph, reciprocal_char_poly, scc_decompose, trace_powers,
)
from stringzeta.strings import enumerate_bands
from strategies import presentations

GP23_N = BigIntSequence([0, 4, 6, 4, 10, 10, 14, 20, 24, 34, 44, 58])


def pipeline(p, M=30):
    g = build_state_graph(p)
    A = adjacency(g)
    return g, scc_decompose(g), reciprocal_char_poly(A), trace_powers(A, M)


@pytest.fixture(scope="module")
def edgeless():
    return Presentation(Quiver(("v",), ()))


# arithmetic ------------------------------------------------------------------

def test_arithmetic_matches_sympy():
    tables = ArithmeticTables.build(300)
    for m in range(1, 301):
        assert mobius(m) == tables.mobius[m] == sympy.mobius(m)
        assert totient(m) == tables.totient[m] == sympy.totient(m)
        assert divisors(m) == list(tables.divisors[m]) == sympy.divisors(m)


def test_arithmetic_rejects_non_positive():
    with pytest.raises(PreconditionError):
        mobius(0)


# counting --------------------------------------------------------------------

def test_gp23_pi_and_mu():
    assert [band_count_pi(GP23_N, m) for m in range(1, 9)] == [0, 2, 2, 0, 2, 0, 2, 2]
    pi = counting_report(GP23_N).pi
    assert mu_from_pi(pi, 2) == mu_from_N(GP23_N, 2) == 1
    assert mu_from_pi(pi, 6) == mu_from_N(GP23_N, 6) == 2


def test_plain_lists_are_one_based_by_position():
    assert band_count_pi([0, 4, 6], 3) == 2
    assert mu_from_N({1: 0, 2: 4}, 2) == 1


def test_inconsistent_inputs_are_caught():
    with pytest.raises(InternalConsistencyError):
        band_count_pi([0, 3], 2)
    with pytest.raises(InternalConsistencyError):
        mu_from_pi([0, 1], 2)
    with pytest.raises(InternalConsistencyError):
        mu_from_N([0, 2], 2)


def test_edgeless(edgeless):
    g, scc, recip, N = pipeline(edgeless, 10)
    assert len(g.vertices) == 0 and recip == 1
    c = counting_report(N)
    assert set(c.pi) == {0} and set(c.mu) == {0}
    assert zeta_coefficients(recip, 5) == [1, 0, 0, 0, 0, 0]
    assert pnt_constants(scc) == (0.0, 0, 1, False)
    assert classify(scc).verdict == DOMESTIC and classify(scc).closed_form() == "0"
    assert radius_of_convergence(0.0) == math.inf


# series ----------------------------------------------------------------------

def test_zeta_examples():
    gp = IntegerPolynomial([1, 0, -1, -1]) ** 2
    assert zeta_coefficients(gp, 4) == [1, 0, 2, 2, 3]
    assert zeta_coefficients(IntegerPolynomial([1, 0, -2, 0, 1]), 6) == [1, 0, 2, 0, 3, 0, 4]
    assert zeta_coefficients(IntegerPolynomial.one(), 3) == [1, 0, 0, 0]


def test_zeta_needs_unit_constant_term():
    with pytest.raises(PreconditionError):
        series_inverse(IntegerPolynomial([2, 1]), 3)


def test_zeta_cross_check_detects_bad_N():
    with pytest.raises(InternalConsistencyError):
        zeta_coefficients(IntegerPolynomial([1, 0, -1, -1]) ** 2, 4, [0, 4, 6, 5])


def test_euler_product_examples():
    assert euler_product_coefficients([2, 2, 3, 3], 4) == [1, 0, 2, 2, 3]
    assert euler_product_coefficients([], 3) == [1, 0, 0, 0]
    assert euler_product_coefficients([3], 7) == [1, 0, 0, 1, 0, 0, 1, 0]


def test_exp_log_matches_sympy():
    t = sympy.symbols("t")
    expr = sympy.exp(sum(sympy.Rational(GP23_N[m], m) * t ** m for m in range(1, 9)))
    want = sympy.Poly(sympy.series(expr, t, 0, 9).removeO(), t).all_coeffs()[::-1]
    assert exp_log_coefficients(GP23_N, 8) == want


# spectral radius and PNT -----------------------------------------------------

def test_eigenvalue_report(gp23):
    g, scc, recip, N = pipeline(gp23)
    r = eigenvalue_report(recip)
    assert r.residual < 1e-9
    assert abs(abs(r.eigenvalues[0]) - 1.324717957244746) < 1e-6
    assert r.peripheral == 2


def test_pnt_constants(gp23, kronecker):
    c = pnt_constants(pipeline(gp23)[1])
    assert (c.C, c.L, c.applicable) == (2, 1, True)
    assert abs(c.R - 1.324717957244746) < 1e-9
    k = pnt_constants(pipeline(kronecker)[1])
    assert (k.R, k.C, k.L, k.applicable) == (1.0, 4, 2, False)


def test_pnt_table(gp23, kronecker):
    g, scc, recip, N = pipeline(gp23, 60)
    c = pnt_constants(scc)
    pi = counting_report(N).pi
    (row,) = pnt_ratio_table(pi, c, [2])
    assert row.pi == 2 and row.ratio == pytest.approx(2 * 2 / (2 * c.R ** 2))
    assert abs(row.ratio - 1.14) < 0.01
    with pytest.raises(PreconditionError):
        pnt_ratio_table(pi, pnt_constants(pipeline(kronecker)[1]), [1])


def test_peripheral_sum_tracks_N(gp23):
    g, scc, recip, N = pipeline(gp23, 60)
    assert abs(N[60] / peripheral_sum(scc, 60) - 1) < 1e-3


# classification --------------------------------------------------------------

def test_gp23_non_domestic(gp23):
    c = classify(pipeline(gp23)[1])
    assert c.verdict == NON_DOMESTIC and c.growth == "exponential" and c.band_count is None
    with pytest.raises(PreconditionError):
        c.closed_form()


def test_domestic_series_matches_mu(kronecker, sb1):
    for p in (kronecker, sb1):
        g, scc, recip, N = pipeline(p, 40)
        c = classify(scc)
        assert c.closed_form() == "t²/(1 − t²)"
        assert mu_series_coefficients(c.mu_series, 40) == list(counting_report(N).mu)


def test_oracle_mismatch_is_reported(kronecker):
    scc = pipeline(kronecker)[1]
    with pytest.raises(InternalConsistencyError):
        classify(scc, bands_oracle=lambda L: [])


@settings(max_examples=60, deadline=None)
@given(presentations(string_algebra=True))
def test_classification_three_ways(p):
    V = len(build_state_graph(p).vertices)
    g, scc, recip, N = pipeline(p, 3 * V + 1)
    c = classify(scc, bands_oracle=lambda L: enumerate_bands(p, L))
    pi = counting_report(N).pi
    late_bands = any(pi[m] for m in range(V + 1, 3 * V + 2))
    small_radius = spectral_radius(recip).radius <= 1 + 1e-9
    assert (c.verdict == DOMESTIC) == (not late_bands) == small_radius


@settings(max_examples=60, deadline=None)
@given(presentations())
def test_counting_invariants(p):
    g, scc, recip, N = pipeline(p, 40)
    c = counting_report(N, validate_string_algebra(p).string_algebra)
    for m in range(1, 41):
        assert sum(mobius(m // d) * N[d] for d in divisors(m)) % m == 0
        assert sum(totient(m // d) * N[d] for d in divisors(m)) % (2 * m) == 0
        assert c.pi[m] >= 0
    z = zeta_coefficients(recip, 12, N)
    assert z == euler_product_coefficients(enumerate_bands(p, 12), 12)
    assert all(x >= 0 for x in z)


@settings(max_examples=40, deadline=None)
@given(presentations())
def test_band_counts_match_enumeration(p):
    N = pipeline(p, 8)[3]
    bands = enumerate_bands(p, 8)
    for m in range(1, 9):
        assert band_count_pi(N, m) == sum(b.length == m for b in bands)
