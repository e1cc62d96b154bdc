#!/usr/bin/env python3
"""One orbit set, three routes to its zeta function.

A simple Reeb orbit is (action, eps1, eps2): the action is its period and
the two parities are the Lefschetz signs of the orbit and of its double
cover.  In dimension 3 the parity pairs are exactly the orbit types:
elliptic (0,0), positive hyperbolic (1,1), negative hyperbolic (0,1).

The zeta function of the flow can be computed three ways, and they agree
term by term:

  * exponentiate the signed sum over all orbit iterates,
  * multiply one closed factor per simple orbit,
  * sum (-1)^grading t^action over ECH generators (multisets of orbits).
"""

from fractions import Fraction as F

from reebzeta import (OrbitSet, ech_generators, elliptic, good_orbit_count,
                      is_good, negative_hyperbolic, positive_hyperbolic,
                      zeta_ech_form, zeta_exp_form, zeta_good_orbits,
                      zeta_product_form)

orbit_set = OrbitSet([
    elliptic("e", F(3, 2)),
    positive_hyperbolic("h", 2),
    negative_hyperbolic("n", 1),
])
cutoff = F(4)

print("orbits:")
for o in orbit_set:
    print(f"  {o.label}: action {o.action}, parities ({o.eps1}, {o.eps2})")

print()
print("zeta, exp form    :", zeta_exp_form(orbit_set, cutoff))
print("zeta, product form:", zeta_product_form(orbit_set, cutoff))
print("zeta, ECH form    :", zeta_ech_form(orbit_set, cutoff))
assert zeta_exp_form(orbit_set, cutoff) \
    == zeta_product_form(orbit_set, cutoff) \
    == zeta_ech_form(orbit_set, cutoff)

print()
print("== ECH generators below cutoff", cutoff, "==")
for gen in ech_generators(orbit_set, cutoff):
    pairs = ", ".join(f"{o.label}^{m}" for o, m in gen.pairs) or "(empty)"
    print(f"  action {str(gen.total_action):>4}  grading {gen.grading}  {pairs}")

print()
print("== good and bad covers of the negative hyperbolic orbit ==")
n = orbit_set.orbits[2]
for d in range(1, 5):
    print(f"  n^{d}: action {d * n.action}, good: {is_good(n, d)}")

print()
print("signed good-orbit count at action 2:",
      good_orbit_count(orbit_set, 2))
print("good-orbit jump series:", zeta_good_orbits(orbit_set, cutoff))

print()
print("== zeta is multiplicative over disjoint unions ==")
left = OrbitSet([elliptic("e", F(3, 2))])
right = OrbitSet([positive_hyperbolic("h", 2), negative_hyperbolic("n", 1)])
product = zeta_product_form(left, cutoff) * zeta_product_form(right, cutoff)
print("zeta(left) * zeta(right) ==", product)
assert product == zeta_product_form(orbit_set, cutoff)
