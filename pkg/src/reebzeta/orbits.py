"""Reeb orbit data and the zeta function of an orbit set.

A closed nondegenerate Reeb flow is abstracted to its finite list of simple
orbits below any action level.  Each simple orbit carries an action A > 0
and two Z/2 Lefschetz parities: eps1 for the orbit itself and eps2 for its
double cover.  Those two bits determine the parity of every d-fold cover
(eps1 for d odd, eps2 for d even), hence every signed count used below.

Three equivalent computations of the zeta function are provided:

* ``zeta_exp_form``      exp of the signed, 1/d-weighted sum over all
                         orbit iterates,
* ``zeta_product_form``  the closed product over simple orbits, one factor
                         (1 - (-1)^(eps1+eps2) t^A)^(-(-1)^eps2) each,
* ``zeta_ech_form``      (3D orbit sets only) the signed sum over ECH
                         generators, i.e. multisets of orbits with
                         hyperbolic multiplicities at most one.

Agreement of the three, coefficient by coefficient, is exact and is the
core consistency check of the library.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Tuple

from . import novikov
from .errors import (DegenerateOrbit, DuplicateLabel, NonPositiveAction,
                     NotThreeDimensional)
from .novikov import NovikovSeries, RatioLike, as_ratio


class OrbitType3D(enum.Enum):
    """Nondegenerate simple-orbit types in a 3-dimensional flow, by the
    eigenvalues of the linearized return map."""

    ELLIPTIC = "elliptic"                    # eigenvalues on the unit circle
    POSITIVE_HYPERBOLIC = "pos-hyperbolic"   # positive real eigenvalues
    NEGATIVE_HYPERBOLIC = "neg-hyperbolic"   # negative real eigenvalues

    @property
    def parities(self) -> Tuple[int, int]:
        """(eps1, eps2) for this orbit type."""
        return _TYPE_PARITIES[self]

    @property
    def is_hyperbolic(self) -> bool:
        return self is not OrbitType3D.ELLIPTIC


_TYPE_PARITIES = {
    OrbitType3D.ELLIPTIC: (0, 0),
    OrbitType3D.POSITIVE_HYPERBOLIC: (1, 1),
    OrbitType3D.NEGATIVE_HYPERBOLIC: (0, 1),
}


@dataclass(frozen=True)
class SimpleOrbit:
    """A simple (embedded) Reeb orbit: action plus the two Lefschetz
    parities from which all iterate data derives."""

    label: str
    action: Fraction
    eps1: int
    eps2: int

    def __post_init__(self):
        object.__setattr__(self, "action", as_ratio(self.action))
        if self.action <= 0:
            raise NonPositiveAction(
                f"orbit {self.label!r}: action {self.action} must be > 0")
        if self.eps1 not in (0, 1) or self.eps2 not in (0, 1):
            raise ValueError(
                f"orbit {self.label!r}: parities must be 0 or 1")

    @classmethod
    def of_type(cls, label: str, action: RatioLike,
                kind: OrbitType3D) -> "SimpleOrbit":
        eps1, eps2 = kind.parities
        return cls(label, as_ratio(action), eps1, eps2)

    @property
    def type_3d(self):
        """The 3D orbit type matching this parity pair, or None for the
        pair (1, 0), which only occurs in higher dimensions."""
        for kind, pair in _TYPE_PARITIES.items():
            if pair == (self.eps1, self.eps2):
                return kind
        return None

    @property
    def is_hyperbolic(self) -> bool:
        """Hyperbolic in the 3D classification: eps2 = 1."""
        return self.eps2 == 1


def elliptic(label: str, action: RatioLike) -> SimpleOrbit:
    return SimpleOrbit.of_type(label, action, OrbitType3D.ELLIPTIC)


def positive_hyperbolic(label: str, action: RatioLike) -> SimpleOrbit:
    return SimpleOrbit.of_type(label, action, OrbitType3D.POSITIVE_HYPERBOLIC)


def negative_hyperbolic(label: str, action: RatioLike) -> SimpleOrbit:
    return SimpleOrbit.of_type(label, action, OrbitType3D.NEGATIVE_HYPERBOLIC)


class OrbitSet:
    """A finite set of simple Reeb orbits with pairwise distinct labels.

    Finiteness stands in for nondegeneracy and compactness of the flow:
    below any action level there are only finitely many orbits.
    """

    __slots__ = ("orbits",)

    def __init__(self, orbits: Iterable[SimpleOrbit] = ()):
        orbits = tuple(orbits)
        seen = set()
        for o in orbits:
            if o.label in seen:
                raise DuplicateLabel(f"orbit label {o.label!r} repeated")
            seen.add(o.label)
        self.orbits = orbits

    def __iter__(self) -> Iterator[SimpleOrbit]:
        return iter(self.orbits)

    def __len__(self) -> int:
        return len(self.orbits)

    def __eq__(self, other):
        if isinstance(other, OrbitSet):
            return sorted(self.orbits, key=_orbit_key) == \
                sorted(other.orbits, key=_orbit_key)
        return NotImplemented

    def __or__(self, other: "OrbitSet") -> "OrbitSet":
        """Disjoint union; labels must not clash."""
        return OrbitSet(self.orbits + other.orbits)

    def __repr__(self):
        return f"OrbitSet({list(self.orbits)!r})"


def _orbit_key(o: SimpleOrbit):
    return (o.action, o.label)


def iterate_parity(orbit: SimpleOrbit, d: int) -> int:
    """Lefschetz parity of the d-fold cover: eps1 for d odd, eps2 for d
    even (the parity of the count of return-map eigenvalues in (0,1),
    resp. (-1,1))."""
    if d < 1:
        raise ValueError(f"covering multiplicity must be >= 1, got {d}")
    return orbit.eps1 if d % 2 else orbit.eps2


def is_good(orbit: SimpleOrbit, d: int) -> bool:
    """False exactly for the bad covers: d even with eps2 != eps1."""
    if d < 1:
        raise ValueError(f"covering multiplicity must be >= 1, got {d}")
    return not (d % 2 == 0 and orbit.eps2 != orbit.eps1)


def _iterates(orbit: SimpleOrbit, cutoff: Fraction):
    """(d, d*action) for all covers with total action <= cutoff."""
    d_max = math.floor(cutoff / orbit.action)
    return ((d, d * orbit.action) for d in range(1, d_max + 1))


def zeta_exp_form(orbit_set: OrbitSet, cutoff: RatioLike) -> NovikovSeries:
    """Zeta via the exponential: exp of the sum, over all orbit iterates
    with action below the cutoff, of (-1)^parity / d * t^(d*A)."""
    cutoff = as_ratio(cutoff)
    terms: dict = {}
    for o in orbit_set:
        for d, action in _iterates(o, cutoff):
            sign = -1 if iterate_parity(o, d) else 1
            c = terms.get(action, 0) + Fraction(sign, d)
            if c:
                terms[action] = c
            elif action in terms:
                del terms[action]
    return novikov.exp(NovikovSeries(terms, cutoff))


def zeta_product_form(orbit_set: OrbitSet, cutoff: RatioLike) -> NovikovSeries:
    """Zeta via the closed product over simple orbits.

    Each orbit of action A <= cutoff contributes the factor
    (1 - (-1)^(eps1+eps2) t^A) raised to -(-1)^eps2; orbits beyond the
    cutoff contribute 1.  The result always has integer coefficients and
    constant term 1.
    """
    cutoff = as_ratio(cutoff)
    result = NovikovSeries.one(cutoff)
    for o in sorted(orbit_set, key=_orbit_key):
        if o.action > cutoff:
            continue
        sign = -1 if (o.eps1 + o.eps2) % 2 else 1
        power = 1 if o.eps2 else -1
        factor = NovikovSeries({Fraction(0): 1, o.action: -sign}, cutoff)
        result = result * factor ** power
    return result


@dataclass(frozen=True)
class EchGenerator:
    """A finite multiset of simple orbits with multiplicities, hyperbolic
    orbits allowed only with multiplicity one.  The mod 2 grading is the
    parity of the number of positive hyperbolic orbits present."""

    pairs: Tuple[Tuple[SimpleOrbit, int], ...]
    grading: int
    total_action: Fraction

    @classmethod
    def from_pairs(cls, pairs) -> "EchGenerator":
        pairs = tuple(sorted(pairs, key=lambda p: _orbit_key(p[0])))
        grading = 0
        total = Fraction(0)
        for orbit, mult in pairs:
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            if orbit.is_hyperbolic and mult != 1:
                raise ValueError(
                    f"hyperbolic orbit {orbit.label!r} with multiplicity {mult}")
            if (orbit.eps1, orbit.eps2) == (1, 1):
                grading ^= 1  # positive hyperbolic, multiplicity is 1
            total += mult * orbit.action
        return cls(pairs, grading, total)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(o.label for o, _ in self.pairs)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(m for _, m in self.pairs)


def ech_generators(orbit_set: OrbitSet, cutoff: RatioLike) -> List[EchGenerator]:
    """All ECH generators with total action <= cutoff, in deterministic
    order (total action, then labels, then multiplicities).

    Only defined for 3D orbit sets: the parity pair (1, 0) has no
    3-dimensional orbit type and is rejected.
    """
    cutoff = as_ratio(cutoff)
    orbits = sorted(orbit_set, key=_orbit_key)
    for o in orbits:
        if (o.eps1, o.eps2) == (1, 0):
            raise NotThreeDimensional(
                f"orbit {o.label!r} has parities (1, 0)")
    out: List[EchGenerator] = []

    def extend(i: int, chosen, total: Fraction):
        if i == len(orbits):
            out.append(EchGenerator.from_pairs(chosen))
            return
        o = orbits[i]
        extend(i + 1, chosen, total)
        budget = cutoff - total
        if o.action > budget:
            return
        max_mult = 1 if o.is_hyperbolic else math.floor(budget / o.action)
        for m in range(1, max_mult + 1):
            extend(i + 1, chosen + [(o, m)], total + m * o.action)

    extend(0, [], Fraction(0))
    out.sort(key=lambda g: (g.total_action, g.labels, g.multiplicities))
    return out


def zeta_ech_form(orbit_set: OrbitSet, cutoff: RatioLike) -> NovikovSeries:
    """Zeta as the signed sum (-1)^grading * t^(total action) over all ECH
    generators below the cutoff."""
    cutoff = as_ratio(cutoff)
    terms: dict = {}
    for gen in ech_generators(orbit_set, cutoff):
        sign = -1 if gen.grading else 1
        c = terms.get(gen.total_action, 0) + sign
        if c:
            terms[gen.total_action] = c
        elif gen.total_action in terms:
            del terms[gen.total_action]
    return NovikovSeries(terms, cutoff)


def good_orbit_count(orbit_set: OrbitSet, at: RatioLike) -> int:
    """Signed count of good orbit iterates with total action exactly
    ``at``: sum of (-1)^parity over good covers gamma^d with d*A = at."""
    at = as_ratio(at)
    total = 0
    for o in orbit_set:
        d = at / o.action
        if d.denominator == 1 and d >= 1:
            d = int(d)
            if is_good(o, d):
                total += -1 if iterate_parity(o, d) else 1
    return total


def zeta_good_orbits(orbit_set: OrbitSet, cutoff: RatioLike) -> NovikovSeries:
    """The signed good-orbit count series: sum over good covers gamma^d
    with d*A <= cutoff of (-1)^parity * t^(d*A).

    This is the Euler-characteristic jump series of the filtered homology
    built on good orbits, recorded directly in action exponents; feeding
    it to the Moebius product transform recovers the zeta function.
    """
    cutoff = as_ratio(cutoff)
    terms: dict = {}
    for o in orbit_set:
        for d, action in _iterates(o, cutoff):
            if not is_good(o, d):
                continue
            c = terms.get(action, 0) + (-1 if iterate_parity(o, d) else 1)
            if c:
                terms[action] = c
            elif action in terms:
                del terms[action]
    return NovikovSeries(terms, cutoff)


def classify_orbit_3d(trace: RatioLike) -> OrbitType3D:
    """Orbit type from the trace of the (rank 2, determinant 1) linearized
    return map: |trace| < 2 elliptic, trace > 2 positive hyperbolic,
    trace < -2 negative hyperbolic."""
    trace = as_ratio(trace)
    if abs(trace) == 2:
        raise DegenerateOrbit(f"|trace| = 2 is degenerate (trace {trace})")
    if abs(trace) < 2:
        return OrbitType3D.ELLIPTIC
    return (OrbitType3D.POSITIVE_HYPERBOLIC if trace > 2
            else OrbitType3D.NEGATIVE_HYPERBOLIC)
