"""Terminating hypergeometric series and the classical summation identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import Number, binomial, frac, is_integer, pochhammer


class NonTerminatingError(ValueError):
    pass


class PochhammerZeroError(ValueError):
    """A lower-parameter Pochhammer vanished inside the terminating range."""

    def __init__(self, parameter: Fraction, index: int):
        self.parameter = parameter
        self.index = index
        super().__init__(
            f"lower parameter {parameter} hits zero at term k={index}"
        )


@dataclass(frozen=True)
class TerminatingSeries:
    """pFq data with at least one nonpositive-integer upper parameter."""

    upper: tuple
    lower: tuple
    argument: Fraction = field(default_factory=lambda: Fraction(1))

    @staticmethod
    def of(upper, lower, argument: Number = 1) -> TerminatingSeries:
        return TerminatingSeries(
            tuple(frac(u) for u in upper),
            tuple(frac(l) for l in lower),
            frac(argument),
        )

    def termination_index(self) -> int:
        indices = [int(-u) for u in self.upper if is_integer(u) and u <= 0]
        if not indices:
            raise NonTerminatingError(f"no nonpositive-integer upper parameter in {self.upper}")
        return min(indices)


def eval_terminating(series: TerminatingSeries) -> Fraction:
    """Exact finite sum sum_k prod(upper)_k / (k! prod(lower)_k) z^k."""
    n = series.termination_index()
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        total += term
        if k == n:
            break
        for u in series.upper:
            term *= u + k
        for l in series.lower:
            if l + k == 0:
                raise PochhammerZeroError(l, k + 1)
            term /= l + k
        term = term * series.argument / (k + 1)
    return total


def hyper(upper, lower, argument: Number = 1) -> Fraction:
    return eval_terminating(TerminatingSeries.of(upper, lower, argument))


CHU_VANDERMONDE = "chu_vandermonde"
PFAFF_SAALSCHUETZ = "pfaff_saalschuetz"
THOMAE = "thomae"
GESSEL_STANTON_5F4 = "gessel_stanton_5f4"

IDENTITY_IDS = (CHU_VANDERMONDE, PFAFF_SAALSCHUETZ, THOMAE, GESSEL_STANTON_5F4)


def _require_clean_lowers(lowers, n: int) -> None:
    """Reject lower parameters whose Pochhammer vanishes anywhere inside the
    designated terminating range, even if an upper parameter would truncate
    the sum earlier: such 0/0 terms poison the identity."""
    for low in lowers:
        low = frac(low)
        if is_integer(low) and -n < low <= 0:
            raise PochhammerZeroError(low, int(-low) + 1)


def identity_pair(identity: str, params) -> tuple[Fraction, Fraction]:
    """Evaluate both sides of a named classical identity, exactly.

    Parameter layouts:
      chu_vandermonde     (A, C, n):       2F1[A, -n; C; 1]
      pfaff_saalschuetz   (A, B, C, n):    3F2[A, B, -n; C, 1+A+B-C-n; 1]
      thomae              (A, B, D, E, n): 3F2[A, B, -n; D, E; 1] vs transformed 3F2
      gessel_stanton_5f4  (A, F, n):       the quadratic-argument 5F4 at z=4
    """
    params = [frac(p) for p in params]
    if identity == CHU_VANDERMONDE:
        A, C, n = params
        n = int(n)
        _require_clean_lowers([C], n)
        lhs = hyper([A, -n], [C])
        rhs = frac(pochhammer(C - A, n)) / frac(pochhammer(C, n))
        return lhs, rhs
    if identity == PFAFF_SAALSCHUETZ:
        A, B, C, n = params
        n = int(n)
        _require_clean_lowers([C, 1 + A + B - C - n], n)
        lhs = hyper([A, B, -n], [C, 1 + A + B - C - n])
        rhs = (
            frac(pochhammer(C - A, n))
            * frac(pochhammer(C - B, n))
            / (frac(pochhammer(C, n)) * frac(pochhammer(C - A - B, n)))
        )
        return lhs, rhs
    if identity == THOMAE:
        A, B, D, E, n = params
        n = int(n)
        _require_clean_lowers([D, E, 1 + B - E - n], n)
        lhs = hyper([A, B, -n], [D, E])
        rhs = (
            frac(pochhammer(E - B, n))
            / frac(pochhammer(E, n))
            * hyper([-n, B, D - A], [D, 1 + B - E - n])
        )
        return lhs, rhs
    if identity == GESSEL_STANTON_5F4:
        A, F, n = params
        n = int(n)
        if A == 0:
            raise PochhammerZeroError(A, 0)
        _require_clean_lowers([1 + A - F, -A + F - 2 * n, 1 + A + 2 * n], n)
        # The pair of parameters (A, 1+A/3) over (A/3) is the very-well-poised
        # marker: their Pochhammer quotient is the factor (A+3k)/A, which
        # stays finite for negative integer A where the split form has 0/0
        # terms.  Summing this way makes the vanishing claim for negative
        # integer A an ordinary evaluation.
        lhs = Fraction(0)
        term = Fraction(1)
        for k in range(n + 1):
            lhs += term * (A + 3 * k) / A
            if k == n:
                break
            for u in (A, F / 2, Fraction(1, 2) + A - F / 2 + n, -n):
                term *= u + k
            for low in (1 + A - F, -A + F - 2 * n, 1 + A + 2 * n):
                term /= low + k
            term = term * 4 / (k + 1)
        rhs = frac(pochhammer(1 + A, 2 * n)) / frac(pochhammer(1 + A - F, 2 * n))
        return lhs, rhs
    raise ValueError(f"unknown identity {identity!r}")


def qbinom_neg1(n: int, k: int) -> int:
    """The Gaussian binomial [n, k]_q evaluated at q = -1."""
    if k < 0 or k > n:
        return 0
    if n % 2 == 0 and k % 2 == 1:
        return 0
    return binomial(n // 2, k // 2)


def qbinom_neg1_by_product(n: int, k: int) -> int:
    """Independent evaluation: extract the z^k coefficient of the product
    (1+z)(1+qz)...(1+q^(n-1)z) at q = -1, then strip the q^binom(k,2) factor."""
    coeffs = [1]
    for i in range(n):
        q_i = (-1) ** i
        coeffs = [
            (coeffs[j] if j < len(coeffs) else 0)
            + q_i * (coeffs[j - 1] if j >= 1 else 0)
            for j in range(len(coeffs) + 1)
        ]
    if k >= len(coeffs):
        return 0
    sign = (-1) ** (k * (k - 1) // 2)
    return sign * coeffs[k]
