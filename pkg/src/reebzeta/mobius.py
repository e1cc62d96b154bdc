"""The Moebius function and the Moebius product transform.

The transform turns an integer series of signed orbit counts (Euler
characteristic jumps, one term per action level) into the multiplicative
zeta function: for input a = sum_A a(A) t^A it forms the finite truncated
product over actions A in the support and integers n >= 1 of

    (1 - t^(n*A)) ** (-a(A) * mu(n)),

factors with n*A beyond the cutoff being 1.  Per single action with count
+1 this reproduces the classical identities

    prod_d prod_n (1 - z^(n*d))^(-mu(n)) = (1 - z)^(-1)        (all d)
    prod_{d odd} prod_n (1 - z^(n*d))^(-mu(n)) = 1 + z         (odd d)

which is exactly what makes the transform invert the orbit-iterate
bookkeeping of the zeta function.
"""

from __future__ import annotations

from fractions import Fraction

from . import orbits as _orbits
from .errors import NonIntegerCoefficients, NonPositiveSupport
from .novikov import NovikovSeries, RatioLike, as_ratio

_memo = {1: 1}


def mobius(n: int) -> int:
    """Moebius mu(n): 0 if a prime square divides n, else (-1)^(number of
    prime factors).  Trial division with memoization."""
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    cached = _memo.get(n)
    if cached is not None:
        return cached
    m = n
    factors = 0
    p = 2
    value = None
    while p * p <= m:
        if m % p == 0:
            m //= p
            factors += 1
            if m % p == 0:
                value = 0
                break
        else:
            p += 1 if p == 2 else 2
    if value is None:
        if m > 1:
            factors += 1
        value = -1 if factors % 2 else 1
    _memo[n] = value
    return value


def mobius_product(a: NovikovSeries, cutoff: RatioLike) -> NovikovSeries:
    """The Moebius product transform of an integer series supported on
    positive exponents; see the module docstring for the factor formula.

    The result is valid modulo min(cutoff, a.cutoff) and carries that
    cutoff; its constant term is 1.
    """
    cutoff = min(as_ratio(cutoff), a.cutoff)
    if not a.has_integer_coefficients:
        raise NonIntegerCoefficients(
            "transform input must have integer coefficients")
    if not a.is_positively_supported:
        raise NonPositiveSupport(
            "transform input must be supported on positive exponents")
    result = NovikovSeries.one(cutoff)
    for action, coeff in a.items():
        if action > cutoff:
            continue
        count = int(coeff)
        n = 1
        while n * action <= cutoff:
            mu = mobius(n)
            if mu:
                base = NovikovSeries({Fraction(0): 1, n * action: -1}, cutoff)
                result = result * base ** (-count * mu)
            n += 1
    return result


def zeta_via_mobius(orbit_set, cutoff: RatioLike) -> NovikovSeries:
    """Zeta of an orbit set through the good-orbit count series: the
    Moebius product transform applied to ``zeta_good_orbits``.  Agrees
    exactly with ``zeta_product_form``."""
    cutoff = as_ratio(cutoff)
    return mobius_product(_orbits.zeta_good_orbits(orbit_set, cutoff), cutoff)
