#!/usr/bin/env python3
"""Tour of the coefficient ring: exact Laurent polynomials in q and p.

Every matrix entry in this package lives in this ring.  Coefficients are
exact rationals, so "equals zero" is always a meaningful statement.
"""

from fractions import Fraction
import json

from cgybe import LaurentQP, one, p, q

print("=" * 60)
print("Exact arithmetic in the ring of Laurent polynomials")
print("=" * 60)

beta = q - q**-1
print(f"\n  beta            = {beta}")
print(f"  beta * (q+q^-1) = {beta * (q + q**-1)}")
print(f"  beta + q^-1     = {beta + q**-1}")
print(f"  q * p^-1 * q^-1 * p = {(q * p**-1) * (q**-1 * p)}")

print("\nUnits invert exactly:")
u = LaurentQP.monomial(Fraction(3, 2), 2, -1)
print(f"  u      = {u}")
print(f"  u^-1   = {u.unit_inverse()}")
print(f"  u*u^-1 = {u * u.unit_inverse()}")

print("\nEvaluation is an exact ring homomorphism:")
x = q**2 - p**-1
point = (Fraction(3, 2), Fraction(2))
print(f"  x = {x},  x(3/2, 2) = {x.eval(*point)}")
print(f"  (x*beta)(3/2, 2)    = {(x * beta).eval(*point)}")
print(f"  x(3/2,2)*beta(3/2,2)= {x.eval(*point) * beta.eval(*point)}")

print("\nSerialization is sorted and bit-stable:")
print(" ", json.dumps(beta.to_json_obj()))
assert LaurentQP.from_json_obj(beta.to_json_obj()) == beta

print("\nSubstituting p = 1 collapses the p-exponents:")
y = q * p**-1 + beta * p**2
print(f"  y          = {y}")
print(f"  y at p = 1 : {y.subs_p(1)}")

print("\nDone: " + str(one) + " ring, no floats anywhere.")
