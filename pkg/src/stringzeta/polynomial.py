"""Exact univariate polynomials with integer coefficients.

Only what the zeta/radius computations need: arithmetic, evaluation,
squarefree part, Sturm root counting and a bisection for the smallest
positive real root.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import InternalConsistencyError

_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _strip(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) if coeffs else (0,)


class IntegerPolynomial:
    """Polynomial in t with arbitrary-precision integer coefficients.

    ``coefficients[i]`` is the coefficient of ``t**i``.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=(0,)):
        coefficients = list(coefficients)
        ints = [int(c) for c in coefficients]
        if ints != coefficients:
            raise ValueError("coefficients must be integers")
        self.coefficients = _strip(ints)

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def degree(self):
        return -1 if self.is_zero() else len(self.coefficients) - 1

    def is_zero(self):
        return self.coefficients == (0,)

    def __eq__(self, other):
        if isinstance(other, IntegerPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, int):
            return self.coefficients == (other,)
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coefficients)})"

    def __getitem__(self, i):
        return self.coefficients[i] if i < len(self.coefficients) else 0

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntegerPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                 for i in range(n))

    def __sub__(self, other):
        return self + other * -1

    def __pow__(self, k):
        out = IntegerPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def derivative(self):
        return IntegerPolynomial([i * c for i, c in enumerate(self.coefficients)][1:] or [0])

    def __str__(self):
        return self.pretty()

    def pretty(self, var="t"):
        """``1 − 2t² − 2t³ + t⁴``: unicode minus and superscript exponents."""
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0 and not self.is_zero():
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + var + (str(i).translate(_SUP) if i > 1 else "")
            terms.append((c < 0, body))
        out = ("−" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" − " if neg else " + ") + body
        return out

    def ascii(self, var="t"):
        """Plain-text form, e.g. ``1 - 2*t^2 - 2*t^3``."""
        s = self.pretty(var).replace("−", "-")
        for i in range(self.degree, 1, -1):
            s = s.replace(var + str(i).translate(_SUP), f"{var}^{i}")
        return s

    def to_list(self):
        return list(self.coefficients)


# ---------------------------------------------------------------------------
# rational polynomial helpers (lists of Fractions, constant term first)
# ---------------------------------------------------------------------------

def _qstrip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _qdivmod(a, b):
    a = [Fraction(x) for x in a]
    b = _qstrip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    a = _qstrip(a)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a = _qstrip(a[:-1]) if a[-1] == 0 else _qstrip(a)
    return _qstrip(q), a


def _qgcd(a, b):
    a, b = _qstrip(map(Fraction, a)), _qstrip(map(Fraction, b))
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return [x / a[-1] for x in a] if a else a


def squarefree_part(p: IntegerPolynomial) -> IntegerPolynomial:
    """p / gcd(p, p'), scaled to a primitive integer polynomial with p's sign at 0."""
    if p.degree <= 0:
        return p
    g = _qgcd(list(p.coefficients), list(p.derivative().coefficients))
    q, r = _qdivmod(list(p.coefficients), g)
    if r:
        raise InternalConsistencyError("gcd does not divide the polynomial")
    den = math.lcm(*(x.denominator for x in q))
    ints = [int(x * den) for x in q]
    content = math.gcd(*ints)
    ints = [x // content for x in ints]
    if ints[0] != 0 and (ints[0] > 0) != (p.coefficients[0] > 0):
        ints = [-x for x in ints]
    return IntegerPolynomial(ints)


def sturm_sequence(p: IntegerPolynomial):
    seq = [[Fraction(c) for c in p.coefficients], [Fraction(c) for c in p.derivative().coefficients]]
    seq[1] = _qstrip(seq[1])
    while seq[-1]:
        r = _qdivmod(seq[-2], seq[-1])[1]
        seq.append([-x for x in r])
    return [s for s in seq if s]


def _sign_changes(seq, x):
    signs = []
    for s in seq:
        v = 0
        for c in reversed(s):
            v = v * x + c
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq, lo, hi):
    """Number of distinct real roots in (lo, hi] of a squarefree polynomial."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def positive_root_bound(p: IntegerPolynomial) -> Fraction:
    """Cauchy bound: every root has modulus below the returned value."""
    c = p.coefficients
    lead = abs(c[-1])
    return 1 + Fraction(max(abs(x) for x in c[:-1]), lead)


def smallest_positive_root(p: IntegerPolynomial, tol=1e-12):
    """Smallest positive real root of p, or None.

    The squarefree part is isolated with Sturm counts, then bisected on
    exact signs until the bracket is narrower than ``tol``.  A nearby
    rational with denominator <= 1000 is returned exactly when it is a root.

    Returns ``(root, bracket_width)``; root is a float or a Fraction.
    """
    q = squarefree_part(p)
    if q.degree <= 0:
        return None
    seq = sturm_sequence(q)
    hi = positive_root_bound(q)
    if count_roots(seq, Fraction(0), hi) == 0:
        return None
    lo = Fraction(0)
    # shrink hi until exactly one root lies in (lo, hi]
    while count_roots(seq, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots(seq, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    if q(hi) == 0:
        return _maybe_exact(q, hi), 0.0
    # one simple root in (lo, hi): sign bisection
    s_lo = q(lo) > 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        # keep the bracket short in bits
        mid = Fraction(round(mid * 2 ** 60), 2 ** 60) if mid.denominator > 2 ** 60 else mid
        v = q(mid)
        if v == 0:
            return _maybe_exact(q, mid), 0.0
        if (v > 0) == s_lo:
            lo = mid
        else:
            hi = mid
    root = _maybe_exact(q, (lo + hi) / 2)
    return root, 0.0 if isinstance(root, Fraction) else float(hi - lo)


def _maybe_exact(q, x):
    cand = Fraction(x).limit_denominator(1000)
    if q(cand) == 0:
        return cand
    return float(x)


def numeric_roots(p: IntegerPolynomial):
    """All complex roots of p (numpy companion-matrix eigenvalues)."""
    if p.degree <= 0:
        return np.array([], dtype=complex)
    return np.roots([float(c) for c in reversed(p.coefficients)])


def root_residual(p: IntegerPolynomial, roots) -> float:
    """Largest |p(z)| / sum |c_i||z|^i over the given roots (relative residual)."""
    worst = 0.0
    for z in roots:
        num = abs(p(complex(z)))
        den = sum(abs(c) * abs(z) ** i for i, c in enumerate(p.coefficients))
        worst = max(worst, num / den if den else num)
    return worst


class SpectralRadius(NamedTuple):
    radius: float
    error_bound: float  # bound on |radius - true value|
    exact: bool


def spectral_radius(reciprocal: IntegerPolynomial, tol=1e-12) -> SpectralRadius:
    """R = 1/t*, t* the least positive root of det(I - tA); R = 0 if there is none."""
    found = smallest_positive_root(reciprocal, tol)
    if found is None:
        return SpectralRadius(0.0, 0.0, True)
    t, width = found
    if isinstance(t, Fraction):
        return SpectralRadius(float(1 / t), 0.0, True)
    # |1/t - 1/t'| <= width / (t (t - width))
    return SpectralRadius(1.0 / t, width / (t * max(t - width, t / 2)), False)
