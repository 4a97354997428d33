"""Band counting, μ-values, zeta coefficients, spectral radius and classification."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, NamedTuple, Optional

from .errors import ConvergenceError, InternalConsistencyError, PreconditionError
from .polynomial import (  # noqa: F401  (spectral_radius re-exported)
    IntegerPolynomial, SpectralRadius, numeric_roots, root_residual, spectral_radius,
)
from .state_graph import BigIntSequence, SCCDecomposition
from .strings import StringWord, band_class_of

RADIUS_TOL = 1e-9

# ---------------------------------------------------------------------------
# arithmetic functions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _factor(m):
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return tuple(sorted(out.items()))


def _positive(m):
    if not isinstance(m, int) or m < 1:
        raise PreconditionError(f"expected a positive integer, got {m!r}")


def mobius(m: int) -> int:
    _positive(m)
    f = _factor(m)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def totient(m: int) -> int:
    _positive(m)
    out = m
    for p, _ in _factor(m):
        out = out // p * (p - 1)
    return out


@lru_cache(maxsize=None)
def _divisors(m):
    small = [d for d in range(1, math.isqrt(m) + 1) if m % d == 0]
    return tuple(sorted(set(small + [m // d for d in small])))


def divisors(m: int) -> list:
    _positive(m)
    return list(_divisors(m))


@dataclass(frozen=True)
class ArithmeticTables:
    """Möbius, totient and divisor tables for 1..M built by a sieve."""
    M: int
    mobius: tuple
    totient: tuple
    divisors: tuple

    @classmethod
    def build(cls, M: int) -> "ArithmeticTables":
        mu = [1] * (M + 1)
        phi = list(range(M + 1))
        is_comp = [False] * (M + 1)
        for p in range(2, M + 1):
            if not is_comp[p]:
                for k in range(p, M + 1, p):
                    if k > p:
                        is_comp[k] = True
                    mu[k] = -mu[k]
                    phi[k] -= phi[k] // p
                for k in range(p * p, M + 1, p * p):
                    mu[k] = 0
        divs = [[] for _ in range(M + 1)]
        for d in range(1, M + 1):
            for k in range(d, M + 1, d):
                divs[k].append(d)
        mu[0] = phi[0] = 0
        return cls(M, tuple(mu), tuple(phi), tuple(tuple(d) for d in divs))


# ---------------------------------------------------------------------------
# π, μ
# ---------------------------------------------------------------------------

def _at(seq, m):
    """1-based lookup: BigIntSequence and mappings by m, plain sequences by m-1."""
    if isinstance(seq, (BigIntSequence, Mapping)):
        return seq[m]
    return seq[m - 1]


def band_count_pi(N, m: int) -> int:
    """π(m) = (1/m) Σ_{d|m} μ_Möb(m/d) N_d."""
    s = sum(mobius(m // d) * _at(N, d) for d in divisors(m))
    q, r = divmod(s, m)
    if r:
        raise InternalConsistencyError(f"Möbius sum {s} is not divisible by m={m}")
    if q < 0:
        raise InternalConsistencyError(f"negative band count at m={m}")
    return q


def mu_from_pi(pi, m: int) -> int:
    """μ(m) = ½ Σ_{d|m} π(d)."""
    s = sum(_at(pi, d) for d in divisors(m))
    if s % 2:
        raise InternalConsistencyError(f"odd band-class total {s} at m={m}")
    return s // 2


def mu_from_N(N, m: int) -> int:
    """μ(m) = (1/2m) Σ_{d|m} φ(m/d) N_d."""
    s = sum(totient(m // d) * _at(N, d) for d in divisors(m))
    q, r = divmod(s, 2 * m)
    if r:
        raise InternalConsistencyError(f"totient sum {s} is not divisible by 2m={2 * m}")
    return q


@dataclass(frozen=True)
class CountingReport:
    N: BigIntSequence
    pi: BigIntSequence
    mu: Optional[BigIntSequence]


def counting_report(N: BigIntSequence, string_algebra=True) -> CountingReport:
    """π for every m covered by N, and μ (both ways, cross-checked) for string algebras."""
    M = len(N)
    pi = BigIntSequence([band_count_pi(N, m) for m in range(1, M + 1)], "mobius")
    mu = None
    if string_algebra:
        vals = []
        for m in range(1, M + 1):
            a, b = mu_from_pi(pi, m), mu_from_N(N, m)
            if a != b:
                raise InternalConsistencyError(f"μ({m}) disagrees: {a} via π, {b} via N")
            vals.append(a)
        mu = BigIntSequence(vals, "totient")
    return CountingReport(N, pi, mu)


# ---------------------------------------------------------------------------
# zeta series
# ---------------------------------------------------------------------------

def series_inverse(poly: IntegerPolynomial, M: int) -> list:
    c = poly.coefficients
    if c[0] != 1:
        raise PreconditionError("constant term must be 1")
    out = [1]
    for k in range(1, M + 1):
        out.append(-sum(c[i] * out[k - i] for i in range(1, min(k, len(c) - 1) + 1)))
    return out


def power_sums(poly: IntegerPolynomial, M: int) -> list:
    """p_1..p_M of the roots of t^n·poly(1/t), i.e. Tr(A^m) when poly = det(I - tA)."""
    c = poly.coefficients
    n = len(c) - 1
    p = []
    for k in range(1, M + 1):
        s = (k * c[k] if k <= n else 0) + sum(c[i] * p[k - 1 - i] for i in range(1, min(k - 1, n) + 1))
        p.append(-s)
    return p


def exp_log_coefficients(N, M: int) -> list:
    """Coefficients of exp(Σ_{m<=M} N_m t^m / m) up to t^M, in exact rationals."""
    b = [Fraction(1)]
    for k in range(1, M + 1):
        b.append(sum(Fraction(_at(N, j)) * b[k - j] for j in range(1, k + 1)) / k)
    return b


def zeta_coefficients(reciprocal: IntegerPolynomial, M: int, N=None) -> list:
    """ζ coefficients up to t^M as the power-series inverse of det(I - tA).

    Cross-checked against the exp-log expansion built from ``N`` (or from
    the power sums of ``reciprocal`` when N is not supplied).
    """
    z = series_inverse(reciprocal, M)
    if N is None:
        N = power_sums(reciprocal, M)
    e = exp_log_coefficients(N, M)
    if any(x != y for x, y in zip(z, e)):
        raise InternalConsistencyError("det-inverse and exp-log zeta expansions disagree")
    if any(x < 0 for x in z):
        raise InternalConsistencyError("negative zeta coefficient")
    return z


def euler_product_coefficients(bands, M: int) -> list:
    """Π (1 - t^|b|)^{-1} over the given band classes, truncated at t^M."""
    out = [1] + [0] * M
    for b in bands:
        L = b.length if hasattr(b, "length") else int(b)
        for k in range(L, M + 1):
            out[k] += out[k - L]
    return out


# ---------------------------------------------------------------------------
# spectral radius
# ---------------------------------------------------------------------------

class EigenvalueReport(NamedTuple):
    eigenvalues: tuple   # non-zero eigenvalues of A, sorted by decreasing modulus
    peripheral: int      # how many have modulus R (within tolerance)
    residual: float


def eigenvalue_report(reciprocal: IntegerPolynomial, radius=None, max_residual=1e-9) -> EigenvalueReport:
    """Non-zero eigenvalues as reciprocals of the roots of det(I - tA)."""
    roots = numeric_roots(reciprocal)
    res = root_residual(reciprocal, roots)
    if res > max_residual:
        raise ConvergenceError(f"root residual {res:.3g} exceeds {max_residual:g}")
    eig = sorted((1 / z for z in roots), key=lambda z: (-abs(z), -z.real, -z.imag))
    if radius is None:
        radius = spectral_radius(reciprocal).radius
    # multiple roots from numpy are only accurate to ~sqrt(eps)
    peripheral = sum(1 for z in eig if abs(abs(z) - radius) <= 1e-6 * max(1.0, radius))
    return EigenvalueReport(tuple(complex(z) for z in eig), peripheral, res)


# ---------------------------------------------------------------------------
# prime number theorem constants
# ---------------------------------------------------------------------------

class PNTConstants(NamedTuple):
    R: float
    C: int
    L: int
    applicable: bool


def pnt_constants(scc: SCCDecomposition) -> PNTConstants:
    """C = total period of components attaining R, L = lcm of all periods."""
    comps = [c for c in scc if c.nontrivial]
    R = max((c.spectral_radius for c in comps), default=0.0)
    L = math.lcm(*(c.period for c in comps)) if comps else 1
    C = sum(c.period for c in comps if R > 0 and abs(c.spectral_radius - R) <= RADIUS_TOL)
    return PNTConstants(R, C, L, R > 1)


class PNTRow(NamedTuple):
    m: int
    pi: int      # π(mL)
    ratio: float


def pnt_ratio_table(pi, constants: PNTConstants, ms) -> list:
    """Rows (m, π(mL), π(mL)·mL / (C·R^{mL}))."""
    if not constants.applicable:
        raise PreconditionError("prime number theorem needs spectral radius > 1")
    R, C, L = constants.R, constants.C, constants.L
    rows = []
    for m in ms:
        k = m * L
        val = _at(pi, k)
        # log-space so large m cannot overflow the float power
        ratio = math.exp(math.log(val * k) - math.log(C) - k * math.log(R)) if val else 0.0
        rows.append(PNTRow(m, val, ratio))
    return rows


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

DOMESTIC = "Domestic"
NON_DOMESTIC = "NonDomestic"


@dataclass(frozen=True)
class Classification:
    verdict: str
    evidence: dict
    band_count: Optional[int]          # None: infinitely many bands
    bands: tuple = ()                  # the finitely many band classes when domestic
    mu_series: Optional[tuple] = None  # ((length, number of band classes), ...)
    rationality: bool = False
    growth: str = ""

    @property
    def domestic(self):
        return self.verdict == DOMESTIC

    def closed_form(self) -> str:
        """μ̄(t) as a sum of terms k·t^ℓ/(1 − t^ℓ); "0" when there are no bands."""
        if self.mu_series is None:
            raise PreconditionError("no closed form for a non-domestic algebra")
        if not self.mu_series:
            return "0"
        sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
        terms = []
        for length, count in self.mu_series:
            coeff = Fraction(count, 2)
            c = "" if coeff == 1 else (f"{coeff}" if coeff.denominator == 1 else f"({coeff})")
            tl = "t" + (str(length).translate(sup) if length > 1 else "")
            terms.append(f"{c}{tl}/(1 − {tl})")
        return " + ".join(terms)


def mu_series_coefficients(mu_series, M: int) -> list:
    """μ(1..M) from the closed form ½ Σ_b t^|b|/(1 - t^|b|)."""
    twice = [0] * (M + 1)
    for length, count in mu_series:
        for k in range(length, M + 1, length):
            twice[k] += count
    return [x // 2 for x in twice[1:]]


def _cycle_word(scc: SCCDecomposition, i) -> StringWord:
    """Read the band rotation traced by a simple-cycle component."""
    arrows = {a.source: a for a in scc.internal_arrows(i)}
    start = min(arrows)
    v, syl = start, []
    while True:
        a = arrows[v]
        syl.append(a.label[-1])   # the syllable added on the left
        v = a.target
        if v == start:
            return StringWord(tuple(syl))


def classify(scc: SCCDecomposition, bands_oracle=None) -> Classification:
    """Domestic iff every component with an arrow is a single directed cycle.

    ``bands_oracle``, if given, is a callable ``L -> list of BandClass``
    (e.g. a brute-force enumeration); for domestic algebras its answer up to
    the longest cycle must match the bands read off the cycles.
    """
    for i, c in enumerate(scc):
        if c.nontrivial and not c.is_simple_cycle:
            internal = Counter(a.source for a in scc.internal_arrows(i))
            branch = min(v for v, k in internal.items() if k >= 2)
            evidence = {"component": i, "branch_vertex": scc.graph.vertices[branch],
                        "out_degree": internal[branch]}
            return Classification(NON_DOMESTIC, evidence, None, growth="exponential")

    bands = sorted(band_class_of(_cycle_word(scc, i)) for i, c in enumerate(scc) if c.nontrivial)
    if bands_oracle is not None:
        L = max((b.length for b in bands), default=1)
        other = sorted(bands_oracle(L))
        if other != bands:
            raise InternalConsistencyError("bands from the state graph differ from the oracle")
    lengths = Counter(b.length for b in bands)
    return Classification(
        DOMESTIC, {"all_components_simple_cycles": True}, len(bands), tuple(bands),
        tuple(sorted(lengths.items())), True, "bounded")


def radius_of_convergence(R: float) -> float:
    return math.inf if R == 0 else 1.0 / R


def peripheral_sum(scc: SCCDecomposition, m: int) -> float:
    """Σ over components attaining R with period | m of period·R^m."""
    c = pnt_constants(scc)
    return float(sum(comp.period * comp.spectral_radius ** m for comp in scc
                     if comp.nontrivial and abs(comp.spectral_radius - c.R) <= RADIUS_TOL
                     and m % comp.period == 0))

