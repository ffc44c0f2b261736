"""The exponential growth constant of scaled cored hexagons.

Scaling every parameter of C_{a,b,c}(m) by n, the number of tilings grows
like exp(k n^2).  The constant k comes out of the hyperfactorial product
formula; the exact counts (hundreds of digits long) are compared against
it at 50-digit log precision.
"""

import mpmath

from cored_hexagons import asymptotic_k, count_cored_formula

print(__doc__)

for a, b, c, m in [(1, 1, 1, 1), (1, 1, 1, 0), (2, 2, 2, 1)]:
    k = asymptotic_k(a, b, c, m)
    print(f"(a,b,c,m) = ({a},{b},{c},{m}):  k = {mpmath.nstr(k, 30)}")
    with mpmath.workdps(50):
        for n in (4, 8, 16):
            count = count_cored_formula(a * n, b * n, c * n, m * n)
            digits = len(str(count))
            ratio = mpmath.log(mpmath.mpf(int(count))) / (n * n)
            print(
                f"  n={n:2d}: count has {digits:5d} digits,"
                f" log/n^2 = {mpmath.nstr(ratio, 12)},"
                f" deviation = {mpmath.nstr(abs(ratio - k), 4)}"
            )
    print()
