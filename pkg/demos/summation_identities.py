"""Exact rational machinery behind the determinant evaluations.

Terminating hypergeometric series are finite sums of exact rationals, and
the classical summation and transformation identities used to certify the
determinant factorizations hold on the nose.  The multiple-sum analogues
of Watson's summation carry a squared Vandermonde weight and evaluate in
closed form by the parity of their two integer parameters.
"""

from fractions import Fraction

from cored_hexagons import identity_pair, qbinom_neg1, watson_pair
from cored_hexagons.formulas import watson_3f2_closed, watson_lhs
from cored_hexagons.hypergeom import qbinom_neg1_by_product

print(__doc__)

print("classical identities at sample parameters")
print("-" * 60)
samples = [
    ("chu_vandermonde", [1, 3, 2]),
    ("chu_vandermonde", [Fraction(1, 2), Fraction(5, 2), 3]),
    ("pfaff_saalschuetz", [Fraction(1, 3), Fraction(-5, 2), 4, 3]),
    ("thomae", [Fraction(2, 3), Fraction(1, 2), 5, Fraction(7, 2), 4]),
    ("gessel_stanton_5f4", [Fraction(5, 2), Fraction(1, 3), 3]),
    ("gessel_stanton_5f4", [-3, Fraction(1, 2), 2]),
]
for identity, params in samples:
    lhs, rhs = identity_pair(identity, params)
    print(f"{identity:20s} {str(params):42s} both sides = {lhs}  ({lhs == rhs})")

print()
print("the Gaussian binomial at q = -1 vanishes for even n, odd k,")
print("and otherwise halves both indices:")
print("-" * 60)
for n in range(7):
    row = [qbinom_neg1(n, k) for k in range(n + 1)]
    check = all(qbinom_neg1(n, k) == qbinom_neg1_by_product(n, k) for k in range(n + 1))
    print(f"n={n}: {row}  (matches coefficient extraction: {check})")

print()
print("multiple-sum analogues of Watson's summation")
print("-" * 60)
B, C = Fraction(3, 2), Fraction(1, 3)
print(f"a=1 collapses to the terminating Watson 3F2 (B={B}, C={C}):")
for M in (2, 4, 6):
    assert watson_lhs("W1", 1, M, B, C) == watson_3f2_closed(M, B, C)
    print(f"  M={M}: sum = {watson_3f2_closed(M, B, C)}")
print()
for variant, a, M in [("W1", 2, 4), ("W2", 3, 5), ("W3", 2, 5)]:
    lhs, rhs = watson_pair(variant, a, M, B, C)
    print(f"{variant}, a={a}, M={M}: multiple sum = {lhs}  closed form agrees: {lhs == rhs}")
lhs, rhs = watson_pair("W1", 3, 3, Fraction(1), Fraction(2))
print(f"W1 with a and M both odd vanishes: sum = {lhs}, branch value = {rhs}")
