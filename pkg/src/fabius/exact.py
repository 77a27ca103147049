"""Exact evaluation of phi, theta, derivatives and Taylor data at dyadic points.

phi is the unique smooth function supported on [-1, 1] with phi(0) = 1 and
phi'(t) = 2 (phi(2t+1) - phi(2t-1)).  At a dyadic point t = q/2^n its value
is the finite double sum

    phi(q/2^n) = 2 * sum_{h=0}^{q+2^n-1} sum_{k=0}^{floor(n/2)} (-1)^s(h)
                 * 2^(C(2k+1,2) - C(n+1,2)) / (n-2k)!
                 * (2(q-h) + 2^(n+1) - 1)^(n-2k) * phi(1 - 2^-(2k+1))

with s(h) the binary digit sum and phi(1 - 2^-(2k+1)) taken from the exact
coefficient tables.  :func:`phi_exact_raw` evaluates that sum literally and
is kept as a differential-testing twin; :func:`phi_exact` first folds the
argument by evenness and by the reflection phi(t) = 1 - phi(1-t), then runs
an integer-accumulator version of the same sum and memoizes the result.

All derivatives reduce to theta(t) = sum_k (-1)^s(k) phi(t - 2k - 1), whose
translates have disjoint open supports: phi^(k)(t) = 2^C(k+1,2) theta(2^k t + 2^k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

from .coefficients import phi_near_one
from .core import Dyadic, thue_morse_sign

__all__ = [
    "as_dyadic",
    "phi_exact",
    "phi_exact_raw",
    "theta_exact",
    "theta_point",
    "ThetaPoint",
    "phi_derivative",
    "taylor_at",
    "TaylorPolynomial",
    "level_denominator_bound",
]


def as_dyadic(t: Dyadic | int | Fraction) -> Dyadic:
    """Coerce exact input to a canonical Dyadic."""
    if isinstance(t, Dyadic):
        return t
    return Dyadic.from_fraction(Fraction(t))


def _weight(n: int, k: int) -> Fraction:
    # prefactor of the inner integer sum for exponent j = n - 2k
    e = k * (2 * k + 1) - n * (n + 1) // 2
    scale = Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)
    return 2 * scale / factorial(n - 2 * k) * phi_near_one(2 * k + 1)


def phi_exact_raw(q: int, n: int) -> Fraction:
    """Literal double-sum evaluation of phi(q/2^n), |q| < 2^n.

    No evenness or reflection folding and no memoization: this is the debug
    twin used to differential-test the optimized path.  q may be negative or
    even; the empty sum at q = -2^n + ... <= -2^n boundary yields 0.
    """
    if n < 0:
        raise ValueError("level n must be >= 0")
    if abs(q) > (1 << n) or (abs(q) == (1 << n) and n > 0):
        raise ValueError("phi_exact_raw requires |q| < 2^n")
    top = q + (1 << n)  # h runs over 0 .. q + 2^n - 1
    total = Fraction(0)
    for h in range(top):
        base = 2 * (q - h) + (1 << (n + 1)) - 1
        sign = thue_morse_sign(h)
        for k in range(n // 2 + 1):
            term = _weight(n, k) * base ** (n - 2 * k)
            total += term if sign > 0 else -term
    return total


@lru_cache(maxsize=None)
def _phi_folded(q: int, n: int) -> Fraction:
    # canonical q odd (or q == 0, n == 0), 0 <= q/2^n <= 1/2
    half = n // 2
    acc = [0] * (half + 1)
    big = (1 << (n + 1)) - 1
    jmin = n - 2 * half  # 0 or 1
    for h in range(q + (1 << n)):
        base = 2 * (q - h) + big
        sq = base * base
        p = base if jmin else 1
        if h.bit_count() & 1:
            for k in range(half, -1, -1):
                acc[k] -= p
                p *= sq
        else:
            for k in range(half, -1, -1):
                acc[k] += p
                p *= sq
    total = Fraction(0)
    for k in range(half + 1):
        total += _weight(n, k) * acc[k]
    return total


def phi_exact(t: Dyadic | int | Fraction) -> Fraction:
    """Exact rational value of phi at a dyadic point; 0 outside (-1, 1)."""
    t = as_dyadic(t)
    q, n = abs(t.num), t.exp  # evenness fold
    if q >= (1 << n):
        return Fraction(0)
    if 2 * q > (1 << n):
        # reflection phi(t) = 1 - phi(1 - t) into [0, 1/2]
        return 1 - _phi_folded((1 << n) - q, n)
    return _phi_folded(q, n)


def level_denominator_bound(n: int) -> int:
    """A common (not necessarily minimal) denominator for all phi(q/2^n).

    The level values are integer combinations of the per-k weights, so the
    lcm of the weight denominators always works; the minimal denominator may
    be smaller and requires scanning the level.
    """
    if n < 0:
        raise ValueError("level n must be >= 0")
    d = 1
    for k in range(n // 2 + 1):
        d = lcm(d, _weight(n, k).denominator)
    return d


def theta_exact(t: Dyadic | int | Fraction) -> Fraction:
    """Exact theta at a dyadic point.

    theta(t) = sum_{k>=0} (-1)^s(k) phi(t - 2k - 1); at most one summand is
    nonzero since the k-th translate lives on (2k, 2k+2).  Zero for t <= 0
    and at even integers.
    """
    t = as_dyadic(t)
    if t.num <= 0:
        return Fraction(0)
    k = t.num >> (t.exp + 1)
    if (k << (t.exp + 1)) == t.num:
        return Fraction(0)  # even integer
    inner = Dyadic(t.num - ((2 * k + 1) << t.exp), t.exp)
    value = phi_exact(inner)
    return -value if k.bit_count() & 1 else value


@dataclass(frozen=True)
class ThetaPoint:
    """A dyadic point paired with its exact theta value."""

    t: Dyadic
    value: Fraction


def theta_point(t: Dyadic | int | Fraction) -> ThetaPoint:
    t = as_dyadic(t)
    return ThetaPoint(t=t, value=theta_exact(t))


def phi_derivative(k: int, t: Dyadic | int | Fraction) -> Fraction:
    """Exact k-th derivative of phi at a dyadic point (0 outside [-1, 1]).

    phi^(k)(t) = 2^C(k+1,2) * theta(2^k t + 2^k); k = 0 agrees with phi_exact.
    """
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    t = as_dyadic(t)
    if abs(t.num) > (1 << t.exp):
        return Fraction(0)
    arg = Dyadic((t.num << k) + (1 << (k + t.exp)), t.exp)
    return (1 << (k * (k + 1) // 2)) * theta_exact(arg)


@dataclass(frozen=True)
class TaylorPolynomial:
    """Exact Taylor coefficients of phi at a dyadic center.

    ``coeffs[k]`` is phi^(k)(center)/k!.  At center q/2^n with q odd and
    |q| < 2^n all derivatives of order above n vanish, so the polynomial has
    degree exactly n there; ``degree`` reports the honest degree (-1 for the
    zero polynomial at the support edges).
    """

    center: Dyadic
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def __call__(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        total = Fraction(0)
        for coeff in reversed(self.coeffs):
            total = total * x + coeff
        return total


def taylor_at(t: Dyadic | int | Fraction, max_order: int) -> TaylorPolynomial:
    """Taylor coefficients phi^(k)(t)/k! for k = 0..max_order, |t| <= 1."""
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    t = as_dyadic(t)
    if abs(t.num) > (1 << t.exp):
        raise ValueError("Taylor centers must lie in [-1, 1]")
    coeffs = tuple(
        phi_derivative(k, t) / factorial(k) for k in range(max_order + 1)
    )
    return TaylorPolynomial(center=t, coeffs=coeffs)
