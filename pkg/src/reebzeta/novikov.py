"""Exact arithmetic in the rational universal Novikov ring, truncated at
an action cutoff.

A series is a finite sum  sum_s c_s * t^s  with rational coefficients c_s
and rational exponents s ("actions"), considered modulo the ideal of terms
with exponent greater than a fixed rational cutoff.  Addition is pointwise,
multiplication is convolution of exponents, units are inverted by summing a
geometric series, and exp/log connect additive and multiplicative pictures.
Everything is exact: equality of two series is structural equality of their
canonical forms, never an approximation.

Exponents may be negative in storage (the ring allows it), but exp, log and
the downstream zeta constructions only ever use series supported on
nonnegative exponents, where truncated arithmetic is self-consistent.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import BadLeadingTerm, NotAUnit, NotPositivelySupported

#: Exponents ("symplectic actions") and coefficients are exact rationals.
Action = Fraction

RatioLike = Union[int, str, Fraction]


def as_ratio(value: RatioLike) -> Fraction:
    """Coerce an int, "p/q" string or Fraction to an exact Fraction.

    Floats are refused rather than converted: this library has no
    floating-point mode, and Fraction(0.1) would silently smuggle in a
    55-bit binary approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(
            f"floating point value {value!r} not accepted; pass an int, "
            "Fraction, or 'p/q' string")
    return Fraction(value)


def _norm_coeff(c):
    # Keep integer coefficients as plain ints: arithmetic on ints is much
    # cheaper than on Fractions and the two compare equal.
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return c


class NovikovSeries:
    """A truncated Novikov series: finite map {exponent: coefficient} plus
    a cutoff.

    Canonical form is maintained on construction: no zero coefficients are
    stored, no exponent exceeds the cutoff, so ``==`` is exact equality of
    values modulo the cutoff.  Instances are immutable in spirit; all
    operations return new series.  Binary operations produce the minimum of
    the two cutoffs.
    """

    __slots__ = ("_terms", "_cutoff")

    def __init__(self, terms: Union[Mapping, Iterable[Tuple]] = (), cutoff: RatioLike = 0):
        cut = as_ratio(cutoff)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = {}
        for s, c in items:
            s = as_ratio(s)
            if s > cut:
                continue
            c = _norm_coeff(as_ratio(c) if not isinstance(c, int) else c)
            c = acc.get(s, 0) + c
            if c:
                acc[s] = c
            elif s in acc:
                del acc[s]
        self._terms = acc
        self._cutoff = cut

    # -- construction helpers ------------------------------------------

    @classmethod
    def zero(cls, cutoff: RatioLike) -> "NovikovSeries":
        return cls((), cutoff)

    @classmethod
    def one(cls, cutoff: RatioLike) -> "NovikovSeries":
        return cls({Fraction(0): 1}, cutoff)

    @classmethod
    def monomial(cls, exponent: RatioLike, coefficient: RatioLike = 1, *,
                 cutoff: RatioLike) -> "NovikovSeries":
        """The single term coefficient * t^exponent."""
        return cls({as_ratio(exponent): as_ratio(coefficient)}, cutoff)

    @classmethod
    def _raw(cls, terms: dict, cutoff: Fraction) -> "NovikovSeries":
        # Internal: terms already canonical (no zeros, exponents <= cutoff).
        self = object.__new__(cls)
        self._terms = terms
        self._cutoff = cutoff
        return self

    # -- inspection ----------------------------------------------------

    @property
    def cutoff(self) -> Fraction:
        return self._cutoff

    def items(self):
        """Terms as (exponent, coefficient) pairs, exponents ascending."""
        return [(s, as_ratio(self._terms[s])) for s in sorted(self._terms)]

    def support(self):
        """Sorted tuple of exponents carrying a nonzero coefficient."""
        return tuple(sorted(self._terms))

    def coefficient(self, exponent: RatioLike) -> Fraction:
        return as_ratio(self._terms.get(as_ratio(exponent), 0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def min_exponent(self):
        """Smallest exponent with nonzero coefficient, or None if zero."""
        return min(self._terms) if self._terms else None

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_unit(self) -> bool:
        """True when the series is invertible, i.e. nonzero modulo cutoff
        (over the rationals any nonzero leading coefficient inverts)."""
        return bool(self._terms)

    @property
    def is_positively_supported(self) -> bool:
        """True when every exponent is strictly positive (the condition
        for membership in the positive part of the ring)."""
        return all(s > 0 for s in self._terms)

    @property
    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1
                   for c in self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[Fraction, Fraction]]:
        return iter(self.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, NovikovSeries):
            return self._cutoff == other._cutoff and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == NovikovSeries({Fraction(0): other}, self._cutoff)
        return NotImplemented

    def __hash__(self):
        return hash((self._cutoff, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            body = "0"
        else:
            parts = []
            for s, c in self.items():
                if s == 0:
                    parts.append(str(c))
                elif c == 1:
                    parts.append(f"t^{s}")
                elif c == -1:
                    parts.append(f"-t^{s}")
                else:
                    parts.append(f"{c}*t^{s}")
            body = " + ".join(parts).replace("+ -", "- ")
        return f"<{body} (mod t^>{self._cutoff})>"

    # -- ring operations -----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, NovikovSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return NovikovSeries({Fraction(0): other}, self._cutoff)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cutoff = min(self._cutoff, other._cutoff)
        acc = {s: c for s, c in self._terms.items() if s <= cutoff}
        for s, c in other._terms.items():
            if s > cutoff:
                continue
            c = acc.get(s, 0) + c
            if c:
                acc[s] = c
            elif s in acc:
                del acc[s]
        return NovikovSeries._raw(acc, cutoff)

    __radd__ = __add__

    def __neg__(self):
        return NovikovSeries._raw({s: -c for s, c in self._terms.items()},
                                  self._cutoff)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return NovikovSeries.zero(self._cutoff)
            other = _norm_coeff(other)
            return NovikovSeries._raw(
                {s: _norm_coeff(c) for s in self._terms
                 if (c := self._terms[s] * other)},
                self._cutoff)
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        cutoff = min(self._cutoff, other._cutoff)
        if not self._terms or not other._terms:
            return NovikovSeries.zero(cutoff)
        q = _common_scale(self._terms, other._terms)
        a = _scaled(self._terms, q)
        b = _scaled(other._terms, q)
        acc = _conv(a, b, _scaled_bound(cutoff, q))
        return _unscaled(acc, q, cutoff)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "NovikovSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = NovikovSeries.one(self._cutoff)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncate(self, cutoff: RatioLike) -> "NovikovSeries":
        """Restrict validity to a smaller cutoff, dropping terms above it."""
        cut = as_ratio(cutoff)
        if cut > self._cutoff:
            raise ValueError(
                f"cannot extend validity: new cutoff {cut} exceeds {self._cutoff}")
        return NovikovSeries({s: c for s, c in self._terms.items() if s <= cut},
                             cut)

    def inverse(self) -> "NovikovSeries":
        """Multiplicative inverse modulo the cutoff.

        Factors the series as c * t^s0 * (1 - r) with r supported on
        positive exponents and sums the geometric series for (1 - r)^-1,
        which terminates because the powers of r leave the truncation
        window.  When s0 > 0 the inverse picks up exponents down to -s0,
        and a * a.inverse() is exactly 1 modulo the cutoff.  A negative
        leading exponent is rejected: no truncation of the inverse could
        satisfy the unit law modulo the cutoff.
        """
        if not self._terms:
            raise NotAUnit("series is zero modulo its cutoff")
        s0 = min(self._terms)
        if s0 < 0:
            raise NotAUnit(
                f"leading exponent {s0} is negative; the inverse is not "
                "determined modulo the cutoff")
        c0 = as_ratio(self._terms[s0])
        cutoff = self._cutoff
        q = _common_scale(self._terms)
        n0 = _scaled_key(s0, q)
        # shifted = a / (c0 t^s0) - 1, supported on positive scaled keys
        neg_r = []
        for s, c in self._terms.items():
            if s == s0:
                continue
            neg_r.append((_scaled_key(s, q) - n0, _norm_coeff(-as_ratio(c) / c0)))
        neg_r.sort()
        bound = _scaled_bound(cutoff, q) + n0  # inner sum runs to cutoff + s0
        acc = {0: 1}
        if neg_r:
            power = dict(neg_r)
            m = neg_r[0][0]
            k = 1
            while k * m <= bound and power:
                for n, c in power.items():
                    acc[n] = acc.get(n, 0) + c
                k += 1
                if k * m <= bound:
                    power = _conv(sorted(power.items()), neg_r, bound)
            _prune(acc)
        inv_c0 = _norm_coeff(1 / c0)
        terms = {}
        for n, c in acc.items():
            terms[Fraction(n - n0, q)] = c * inv_c0
        out = _unscaled_terms(terms, cutoff)
        return NovikovSeries._raw(out, cutoff)


# -- scaled-integer internals ------------------------------------------
#
# Heavy operations rescale all exponents to a common denominator q so the
# inner loops run on integer keys; coefficients stay exact (ints whenever
# the value is an integer, Fractions otherwise).


def _common_scale(*term_dicts) -> int:
    q = 1
    for terms in term_dicts:
        for s in terms:
            q = math.lcm(q, s.denominator)
    return q


def _scaled_key(s: Fraction, q: int) -> int:
    return s.numerator * (q // s.denominator)


def _scaled(terms: dict, q: int):
    return sorted((_scaled_key(s, q), c) for s, c in terms.items())


def _scaled_bound(cutoff: Fraction, q: int) -> int:
    return math.floor(cutoff * q)


def _conv(a, b, bound: int) -> dict:
    # a, b: sorted lists of (int key, coeff); keep keys <= bound.
    acc = {}
    get = acc.get
    for na, ca in a:
        if na + b[0][0] > bound:
            break
        for nb, cb in b:
            n = na + nb
            if n > bound:
                break
            acc[n] = get(n, 0) + ca * cb
    _prune(acc)
    return acc


def _prune(acc: dict) -> None:
    for n in [n for n, c in acc.items() if not c]:
        del acc[n]


def _unscaled(acc: dict, q: int, cutoff: Fraction) -> NovikovSeries:
    return NovikovSeries._raw({Fraction(n, q): c for n, c in acc.items()},
                              cutoff)


def _unscaled_terms(terms: dict, cutoff: Fraction) -> dict:
    return {s: _norm_coeff(c) for s, c in terms.items() if c and s <= cutoff}


# -- exponential and logarithm -----------------------------------------


def exp(a: NovikovSeries) -> NovikovSeries:
    """exp(a) = sum_k a^k / k!  for a supported on positive exponents.

    Computed through the formal identity exp(a)' = a' * exp(a), which gives
    the coefficients by a single pass over the (finitely many) exponents
    reachable as sums of exponents of a below the cutoff; the value agrees
    exactly with the truncated factorial sum.
    """
    if not a.is_positively_supported:
        raise NotPositivelySupported(
            "exp needs every exponent strictly positive")
    cutoff = a.cutoff
    if a.is_zero:
        return NovikovSeries.one(cutoff)
    q = _common_scale(a._terms)
    bound = _scaled_bound(cutoff, q)
    g = _scaled(a._terms, q)
    weighted = [(j, _norm_coeff(j * c)) for j, c in g]
    reachable = _semigroup([j for j, _ in g], bound)
    f = {0: 1}
    for n in reachable:
        total = 0
        for j, jc in weighted:
            if j > n:
                break
            prev = f.get(n - j)
            if prev:
                total += jc * prev
        if total:
            f[n] = _norm_coeff(total / n if isinstance(total, Fraction)
                               else Fraction(total, n))
    del f[0]
    terms = {Fraction(n, q): c for n, c in f.items()}
    terms[Fraction(0)] = 1
    return NovikovSeries._raw(terms, cutoff)


def _semigroup(generators, bound: int):
    """Sorted positive elements <= bound of the additive semigroup
    generated by the given positive integers."""
    reach = {0}
    for g in sorted(set(generators)):
        new = reach
        while new:
            new = {r + g for r in new if r + g <= bound} - reach
            reach |= new
    reach.discard(0)
    return sorted(reach)


def log(a: NovikovSeries) -> NovikovSeries:
    """log(1 + r) = sum_{k>=1} (-1)^{k+1} r^k / k  for r supported on
    positive exponents; inverse of exp on its domain, computed by the
    direct power sum (deliberately a different route than exp, so the
    round-trip tests cross-check the two)."""
    terms = a._terms
    if any(s < 0 for s in terms):
        raise BadLeadingTerm("log input has a negative exponent")
    if a.constant_term != 1:
        raise BadLeadingTerm(
            f"log needs constant term 1, got {a.constant_term}")
    cutoff = a.cutoff
    r_terms = {s: c for s, c in terms.items() if s != 0}
    if not r_terms:
        return NovikovSeries.zero(cutoff)
    q = _common_scale(r_terms)
    bound = _scaled_bound(cutoff, q)
    r = _scaled(r_terms, q)
    m = r[0][0]
    acc = {}
    power = dict(r)
    k = 1
    while k * m <= bound and power:
        sign = 1 if k % 2 else -1
        for n, c in power.items():
            acc[n] = acc.get(n, 0) + Fraction(sign, k) * c
        k += 1
        if k * m <= bound:
            power = _conv(sorted(power.items()), r, bound)
    _prune(acc)
    return _unscaled({n: _norm_coeff(c) for n, c in acc.items()}, q, cutoff)
