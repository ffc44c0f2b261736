"""Closed-form evaluators: hyperfactorial product formulas for the tiling
counts, the four root-of-unity determinant evaluations, the orbit-count
factorization, the asymptotic constant, the off-center conjectures, and the
multiple-sum summation theorems.

Every product is evaluated with sqrt(pi) bookkeeping and asserted to come
out rational; a leaked half power of pi means a transcription error.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import mpmath

from .exactnum import (
    CycloElement,
    Number,
    SQRTPI_ONE,
    SqrtPiScaled,
    double_factorial_odd,
    factorial_exact,
    frac,
    hyperfactorial,
    omega3,
    omega6,
    pochhammer,
)
from .hypergeom import PochhammerZeroError

FORMULA_TAGS = (
    "Box",
    "Enum",
    "Shifted",
    "SignedEnum",
    "SignedShifted",
    "Andrews",
    "Zare1",
    "Om3",
    "Om6",
    "Case10",
    "AsymptoticK",
    "Conjecture1",
    "Conjecture2",
    "WatsonLHS",
    "WatsonRHS",
    "LemmaRHS",
)

OMEGA_ONE = "one"
OMEGA_MINUS_ONE = "minus1"
OMEGA_THIRD = "third"
OMEGA_SIXTH = "sixth"
OMEGA_CASES = (OMEGA_ONE, OMEGA_MINUS_ONE, OMEGA_THIRD, OMEGA_SIXTH)

W1, W2, W3 = "W1", "W2", "W3"
WATSON_VARIANTS = (W1, W2, W3)


class FormulaDomainError(ValueError):
    """The parameters fall outside the formula's stated domain."""


def _h(x: Number) -> SqrtPiScaled:
    return hyperfactorial(frac(x))


def _ceil(x: Number) -> int:
    return math.ceil(frac(x))


def _floor(x: Number) -> int:
    return math.floor(frac(x))


def _clamped_floor(x: Number) -> int:
    """floor with negative arguments read as 0, the convention that closes
    the root-of-unity product formulas."""
    x = frac(x)
    return 0 if x < 0 else math.floor(x)


def macmahon_box(a: int, b: int, c: int) -> int:
    """Number of plane partitions in an a x b x c box."""
    value = (
        _h(a) * _h(b) * _h(c) * _h(a + b + c) / (_h(a + b) * _h(b + c) * _h(c + a))
    ).to_rational()
    assert value.denominator == 1
    return int(value)


def _enum_centered(a: int, b: int, c: int, m: int) -> Fraction:
    h = Fraction(1, 2)
    v = _h(a + m) * _h(b + m) * _h(c + m) * _h(a + b + c + m)
    v = v / (_h(a + b + m) * _h(a + c + m) * _h(b + c + m))
    v = v * _h(m + _ceil(frac(a + b + c, 2))) * _h(m + _floor(frac(a + b + c, 2)))
    v = v / (_h(frac(a + b, 2) + m) * _h(frac(a + c, 2) + m) * _h(frac(b + c, 2) + m))
    v = v * _h(_ceil(a * h)) * _h(_ceil(b * h)) * _h(_ceil(c * h))
    v = v * _h(_floor(a * h)) * _h(_floor(b * h)) * _h(_floor(c * h))
    v = v / (_h(m * h + _ceil(a * h)) * _h(m * h + _ceil(b * h)) * _h(m * h + _ceil(c * h)))
    v = v / (_h(m * h + _floor(a * h)) * _h(m * h + _floor(b * h)) * _h(m * h + _floor(c * h)))
    v = v * _h(m * h) ** 2
    v = v * _h(frac(a + b + m, 2)) ** 2 * _h(frac(a + c + m, 2)) ** 2 * _h(frac(b + c + m, 2)) ** 2
    v = v / (_h(m * h + _ceil(frac(a + b + c, 2))) * _h(m * h + _floor(frac(a + b + c, 2))))
    v = v / (_h(frac(a + b, 2)) * _h(frac(a + c, 2)) * _h(frac(b + c, 2)))
    return v.to_rational()


def _enum_shifted(a: int, b: int, c: int, m: int) -> Fraction:
    h = Fraction(1, 2)
    v = _h(a + m) * _h(b + m) * _h(c + m) * _h(a + b + c + m)
    v = v * _h(m + _ceil(frac(a + b + c, 2))) * _h(m + _floor(frac(a + b + c, 2)))
    v = v / (_h(a + b + m) * _h(a + c + m) * _h(b + c + m))
    v = v / (_h(_floor(frac(a + c, 2)) + m) * _h(frac(b + c, 2) + m) * _h(_ceil(frac(a + b, 2)) + m))
    v = v * _h(m * h) ** 2
    v = v * _h(_ceil(a * h)) * _h(_ceil(b * h)) * _h(_ceil(c * h))
    v = v * _h(_floor(a * h)) * _h(_floor(b * h)) * _h(_floor(c * h))
    v = v / (_h(m * h + _ceil(a * h)) * _h(m * h + _ceil(b * h)) * _h(m * h + _ceil(c * h)))
    v = v / (_h(m * h + _floor(a * h)) * _h(m * h + _floor(b * h)) * _h(m * h + _floor(c * h)))
    v = v * _h(_ceil(frac(a + b, 2)) + m * h) * _h(_floor(frac(a + b, 2)) + m * h)
    v = v * _h(_floor(frac(a + c, 2)) + m * h) * _h(_ceil(frac(a + c, 2)) + m * h)
    v = v * _h(frac(b + c, 2) + m * h) ** 2
    v = v / (_h(m * h + _ceil(frac(a + b + c, 2))) * _h(m * h + _floor(frac(a + b + c, 2))))
    v = v / (_h(_floor(frac(a + b, 2))) * _h(_ceil(frac(a + c, 2))) * _h(frac(b + c, 2)))
    return v.to_rational()


def _signed_centered(a: int, b: int, c: int, m: int) -> Fraction:
    if a % 2 == 1:
        # all of a, b, c odd
        return Fraction(0)
    h = Fraction(1, 2)
    v = _h(a + m) * _h(b + m) * _h(c + m) * _h(a + b + c + m)
    v = v / (_h(a + b + m) * _h(a + c + m) * _h(b + c + m))
    v = v * _h(a * h) ** 2 * _h(b * h) ** 2 * _h(c * h) ** 2
    v = v * _h(frac(m - 1, 2)) * _h(frac(m + 1, 2))
    v = v / (_h(a * h + frac(m - 1, 2)) * _h(b * h + frac(m - 1, 2)) * _h(c * h + frac(m - 1, 2)))
    v = v / (_h(a * h + frac(m + 1, 2)) * _h(b * h + frac(m + 1, 2)) * _h(c * h + frac(m + 1, 2)))
    v = v * _h(frac(a + b + m - 1, 2)) * _h(frac(a + b + m + 1, 2))
    v = v * _h(frac(a + c + m - 1, 2)) * _h(frac(a + c + m + 1, 2))
    v = v * _h(frac(b + c + m - 1, 2)) * _h(frac(b + c + m + 1, 2))
    v = v / (_h(frac(a + b, 2)) * _h(frac(a + c, 2)) * _h(frac(b + c, 2)))
    v = v / (_h(frac(a + b, 2) + m) * _h(frac(a + c, 2) + m) * _h(frac(b + c, 2) + m))
    v = v * _h(frac(a + b + c, 2) + m) ** 2
    v = v / (_h(frac(a + b + c, 2) + frac(m - 1, 2)) * _h(frac(a + b + c, 2) + frac(m + 1, 2)))
    return (-1) ** (a // 2) * v.to_rational()


def _signed_shifted(a: int, b: int, c: int, m: int) -> Fraction:
    h = Fraction(1, 2)
    mm, mp = frac(m - 1, 2), frac(m + 1, 2)
    v = _h(a + m) * _h(b + m) * _h(c + m) * _h(a + b + c + m)
    v = v / (_h(a + b + m) * _h(a + c + m) * _h(b + c + m))
    v = v * _h(_floor(frac(a + b + c, 2)) + m) * _h(_ceil(frac(a + b + c, 2)) + m)
    v = v / (_h(frac(a + b + 1, 2) + m) * _h(frac(a + c - 1, 2) + m) * _h(frac(b + c, 2) + m))
    v = v * _h(_floor(a * h)) * _h(_ceil(a * h)) * _h(_floor(b * h)) * _h(_ceil(b * h))
    v = v * _h(_floor(c * h)) * _h(_ceil(c * h)) * _h(mm) * _h(mp)
    v = v / (_h(mm + _floor(frac(a + 1, 2))) * _h(mp + _ceil(frac(a - 1, 2))))
    v = v / (_h(mm + _floor(frac(b + 1, 2))) * _h(mp + _ceil(frac(b - 1, 2))))
    v = v / _h(mm + _floor(frac(c + 1, 2)))
    v = v * _h(frac(a + b + m, 2)) ** 2 * _h(frac(a + c + m, 2)) ** 2
    v = v * _h(frac(b + c + m - 1, 2)) * _h(frac(b + c + m + 1, 2))
    v = v / (_h(mp + _ceil(frac(c - 1, 2))) * _h(frac(a + b - 1, 2)) * _h(frac(a + c + 1, 2)))
    v = v / (_h(frac(b + c, 2)) * _h(mm + _floor(frac(a + b + c + 1, 2))) * _h(mp + _ceil(frac(a + b + c - 1, 2))))
    return (-1) ** _ceil(a * h) * v.to_rational()


def count_cored_formula(a: int, b: int, c: int, m: int, signed: bool = False) -> Fraction:
    """The closed-form tiling count of the cored hexagon: plain for
    signed=False, the (-1)^n weighted count for signed=True.  Dispatches on
    the core placement resolved from the side parities."""
    if min(a, b, c, m) < 0:
        raise FormulaDomainError("side lengths must be nonnegative")
    if b % 2 != c % 2:
        raise FormulaDomainError("b and c must have equal parity; relabel first")
    centered = a % 2 == b % 2
    if signed:
        value = _signed_centered(a, b, c, m) if centered else _signed_shifted(a, b, c, m)
    else:
        value = _enum_centered(a, b, c, m) if centered else _enum_shifted(a, b, c, m)
    assert value.denominator == 1, "tiling counts must be integers"
    return value


# --- the four evaluations of det(omega I + B) ------------------------------


def andrews_rhs(a: int, m: Number) -> Fraction:
    """Closed form of det(I + B(a, m)); the m parameter may be any rational
    (the factorization of the orbit count evaluates it at shifted values)."""
    m2 = frac(m) / 2
    value = Fraction(2) ** ((a + 1) // 2)
    if a % 2 == 0:
        for i in range(1, a - 1):
            value *= frac(pochhammer(m2 + (i + 1) // 2 + 1, (i + 3) // 4))
        for i in range(1, a // 2 + 1):
            base = m2 + Fraction(3 * a, 2) - _ceil(frac(3 * i, 2)) + Fraction(3, 2)
            value *= frac(pochhammer(base, (i + 1) // 2 - 1))
            value *= frac(pochhammer(base, (i + 1) // 2))
        for i in range(1, a // 2):
            value /= double_factorial_odd(i) * double_factorial_odd(i + 1)
    else:
        for i in range(1, a - 1):
            value *= frac(pochhammer(m2 + (i + 1) // 2 + 1, (i + 3) // 4))
        for i in range(1, (a - 1) // 2 + 1):
            value *= frac(
                pochhammer(m2 + Fraction(3 * a, 2) - _ceil(frac(3 * i - 1, 2)) + 1, i // 2)
            )
            value *= frac(
                pochhammer(m2 + Fraction(3 * a, 2) - _ceil(frac(3 * i, 2)), (i + 1) // 2)
            )
        for i in range(1, (a - 1) // 2 + 1):
            value /= double_factorial_odd(i) ** 2
    return value


def zare1_rhs(a: int, m: Number) -> Fraction:
    """Closed form of det(-I + B(a, m)): zero for odd a."""
    if a % 2 == 1:
        return Fraction(0)
    m = frac(m)
    m2 = m / 2
    v = SQRTPI_ONE
    for i in range(a // 2):
        v = v * factorial_exact(i) ** 2
        v = v * factorial_exact(m2 + i) ** 2
        v = v * factorial_exact(m2 + 3 * i + 1) ** 2
        v = v * factorial_exact(m + 3 * i + 1) ** 2
        v = v / (factorial_exact(2 * i) * factorial_exact(2 * i + 1))
        v = v / (factorial_exact(m2 + 2 * i) ** 2 * factorial_exact(m2 + 2 * i + 1) ** 2)
        v = v / (factorial_exact(m + 2 * i) * factorial_exact(m + 2 * i + 1))
    return (-1) ** (a // 2) * v.to_rational()


def _om_double_factorials(a: int) -> Fraction:
    value = Fraction(1)
    for i in range(1, a // 2 + 1):
        value *= double_factorial_odd(i)
    for i in range(1, (a - 1) // 2 + 1):
        value *= double_factorial_odd(i)
    return value


def om3_rhs(a: int, m: Number) -> CycloElement:
    """Closed form of det(wI + B(a, m)) for w a primitive third root."""
    m2 = frac(m) / 2
    rational = Fraction(2) ** (a // 2) / _om_double_factorials(a)
    i = 0
    while a - 4 * i >= 0:
        rational *= frac(pochhammer(m2 + 3 * i + 1, _clamped_floor(frac(a - 4 * i, 2))))
        rational *= frac(pochhammer(m2 + 3 * i + 3, _clamped_floor(frac(a - 4 * i - 3, 2))))
        rational *= frac(
            pochhammer(m2 + a - i + Fraction(1, 2), _clamped_floor(frac(a - 4 * i - 1, 2)))
        )
        rational *= frac(
            pochhammer(m2 + a - i - Fraction(1, 2), _clamped_floor(frac(a - 4 * i - 2, 2)))
        )
        i += 1
    w = omega3()
    return (1 + w) ** a * rational


def om6_rhs(a: int, m: Number) -> CycloElement:
    """Closed form of det(wI + B(a, m)) for w a primitive sixth root."""
    m2 = frac(m) / 2
    rational = Fraction(2, 3) ** (a // 2) / _om_double_factorials(a)
    i = 0
    while a - 4 * i >= 0:
        rational *= frac(
            pochhammer(m2 + 3 * i + Fraction(3, 2), _clamped_floor(frac(a - 4 * i - 1, 2)))
        )
        rational *= frac(
            pochhammer(m2 + 3 * i + Fraction(5, 2), _clamped_floor(frac(a - 4 * i - 2, 2)))
        )
        rational *= frac(pochhammer(m2 + a - i, _clamped_floor(frac(a - 4 * i, 2))))
        rational *= frac(pochhammer(m2 + a - i, _clamped_floor(frac(a - 4 * i - 3, 2))))
        i += 1
    w = omega6()
    return (1 + w) ** a * rational


def rhs_omega_det(a: int, m: Number, omega_case: str):
    """The right-hand side of the det(omega I + B(a, m)) evaluation for the
    four sixth roots of unity that occur."""
    if omega_case == OMEGA_ONE:
        return andrews_rhs(a, m)
    if omega_case == OMEGA_MINUS_ONE:
        return zare1_rhs(a, m)
    if omega_case == OMEGA_THIRD:
        return om3_rhs(a, m)
    if omega_case == OMEGA_SIXTH:
        return om6_rhs(a, m)
    raise FormulaDomainError(f"unknown omega case {omega_case!r}")


def rhs_case10(a: int, m: int) -> Fraction:
    """Closed form of the (-1)^(n6) count of cyclically symmetric tilings,
    by parity branch."""
    if a < 0 or m < 0:
        raise FormulaDomainError("parameters must be nonnegative")
    if a == 0:
        return Fraction(1)
    if a % 2 == 0 and m % 2 == 0:
        return om6_rhs(a // 2, m // 2).norm()
    if a % 2 == 1 and m % 2 == 0:
        return frac(andrews_rhs((a + 1) // 2, frac(m, 2) - 1)) * frac(
            andrews_rhs((a - 1) // 2, frac(m, 2) + 1)
        )
    if a % 2 == 0 and m % 2 == 1:
        return frac(andrews_rhs(a // 2, frac(m - 1, 2))) * zare1_rhs(a // 2, frac(m + 1, 2))
    return frac(andrews_rhs((a + 1) // 2, frac(m - 1, 2))) * zare1_rhs(
        (a - 1) // 2, frac(m + 1, 2)
    )


# --- asymptotics ------------------------------------------------------------


def _asy_args(a: int, b: int, c: int, m: int) -> list[tuple[Fraction, int]]:
    """Scaled hyperfactorial arguments of the plain-count product formula,
    as (coefficient-of-n, signed multiplicity) pairs; ceilings and floors
    both scale to the exact half."""
    s = frac(a + b + c)
    h = Fraction(1, 2)
    args = [
        (frac(a + m), 1),
        (frac(b + m), 1),
        (frac(c + m), 1),
        (frac(a + b + c + m), 1),
        (m + s * h, 2),
        (a * h, 2),
        (b * h, 2),
        (c * h, 2),
        (m * h, 2),
        (frac(a + b + m) * h, 2),
        (frac(a + c + m) * h, 2),
        (frac(b + c + m) * h, 2),
        (frac(a + b + m), -1),
        (frac(a + c + m), -1),
        (frac(b + c + m), -1),
        (frac(a + b) * h + m, -1),
        (frac(a + c) * h + m, -1),
        (frac(b + c) * h + m, -1),
        (m * h + a * h, -2),
        (m * h + b * h, -2),
        (m * h + c * h, -2),
        (m * h + s * h, -2),
        (frac(a + b) * h, -1),
        (frac(a + c) * h, -1),
        (frac(b + c) * h, -1),
    ]
    return args


def asymptotic_k(a: int, b: int, c: int, m: int, digits: int = 50) -> mpmath.mpf:
    """The growth constant k with L(C_{an,bn,cn}(mn)) ~ exp(k n^2).

    Computed by Euler-MacLaurin from the hyperfactorial product formula:
    log h(xn) = (xn)^2/2 log(xn) - 3(xn)^2/4 + O(n log n), and the x^2 terms
    cancel across the product, leaving k = sum of +/- (x^2/2) log x over the
    scaled arguments.  Arguments scaling to zero drop out; they carry zero
    weight."""
    if min(a, b, c, m) < 0:
        raise FormulaDomainError("parameters must be nonnegative")
    args = _asy_args(a, b, c, m)
    balance = sum(x * x * mult for x, mult in args)
    assert balance == 0, "x^2 terms must cancel for a finite constant"
    with mpmath.workdps(digits):
        k = mpmath.mpf(0)
        for x, mult in args:
            if x == 0:
                continue
            if x < 0:
                raise FormulaDomainError(f"negative scaled argument {x}")
            coeff = x * x / 2 * mult
            k += (
                mpmath.mpf(coeff.numerator)
                / coeff.denominator
                * mpmath.log(mpmath.mpf(x.numerator) / x.denominator)
            )
        return +k


# --- conjectured off-center formulas ---------------------------------------


def conjecture_rhs(which: int, a: int, b: int, c: int, m: int) -> Fraction:
    """Right-hand sides of the two off-center conjectures (core moved by one
    unit, respectively 3/2 units).  Degenerate hexagons with a+b < 2 or
    a+c < 2 are outside the formula's domain."""
    h = Fraction(1, 2)
    if which == 1:
        if a % 2 != b % 2 or b % 2 != c % 2:
            raise FormulaDomainError("the one-unit shift needs a, b, c of equal parity")
        if a + b < 2 or frac(a + c, 2) + m < 1:
            raise FormulaDomainError("degenerate hexagon: off-center core does not fit")
        v = _h(a + m) * _h(b + m) * _h(c + m) * _h(a + b + c + m)
        v = v / (_h(a + b + m) * _h(a + c + m) * _h(b + c + m))
        v = v * _h(m + _ceil(frac(a + b + c, 2))) * _h(m + _floor(frac(a + b + c, 2)))
        v = v / (_h(frac(a + b, 2) + m + 1) * _h(frac(a + c, 2) + m - 1) * _h(frac(b + c, 2) + m))
        v = v * _h(_ceil(a * h)) * _h(_ceil(b * h)) * _h(_ceil(c * h))
        v = v * _h(_floor(a * h)) * _h(_floor(b * h)) * _h(_floor(c * h))
        v = v / (_h(m * h + _ceil(a * h)) * _h(m * h + _ceil(b * h)) * _h(m * h + _ceil(c * h)))
        v = v / (_h(m * h + _floor(a * h)) * _h(m * h + _floor(b * h)) * _h(m * h + _floor(c * h)))
        v = v * _h(m * h) ** 2
        v = v * _h(frac(a + b + m, 2)) ** 2 * _h(frac(a + c + m, 2)) ** 2 * _h(frac(b + c + m, 2)) ** 2
        v = v / (_h(m * h + _ceil(frac(a + b + c, 2))) * _h(m * h + _floor(frac(a + b + c, 2))))
        v = v / (_h(frac(a + b, 2) - 1) * _h(frac(a + c, 2) + 1) * _h(frac(b + c, 2)))
        if a % 2 == 0:
            p = (a + b) * (a + c) + 2 * a * m
        else:
            p = (a + b) * (a + c) + 2 * (a + b + c + m) * m
        return Fraction(1, 4) * v.to_rational() * p
    if which == 2:
        if a % 2 == b % 2 or b % 2 != c % 2:
            raise FormulaDomainError("the 3/2-unit shift needs a of deviant parity")
        if _floor(frac(a + b, 2)) < 1 or _floor(frac(a + c, 2)) + m < 1:
            raise FormulaDomainError("degenerate hexagon: off-center core does not fit")
        v = _h(a + m) * _h(b + m) * _h(c + m) * _h(a + b + c + m)
        v = v / (_h(a + b + m) * _h(a + c + m) * _h(b + c + m))
        v = v * _h(m * h) ** 2
        v = v * _h(_ceil(a * h)) * _h(_ceil(b * h)) * _h(_ceil(c * h))
        v = v * _h(_floor(a * h)) * _h(_floor(b * h)) * _h(_floor(c * h))
        v = v / (_h(m * h + _ceil(a * h)) * _h(m * h + _ceil(b * h)) * _h(m * h + _ceil(c * h)))
        v = v / (_h(m * h + _floor(a * h)) * _h(m * h + _floor(b * h)) * _h(m * h + _floor(c * h)))
        v = v * _h(_ceil(frac(a + b, 2)) + m * h) * _h(_floor(frac(a + b, 2)) + m * h)
        v = v * _h(_floor(frac(a + c, 2)) + m * h) * _h(_ceil(frac(a + c, 2)) + m * h)
        v = v * _h(frac(b + c, 2) + m * h) ** 2
        v = v / (_h(m * h + _ceil(frac(a + b + c, 2))) * _h(m * h + _floor(frac(a + b + c, 2))))
        v = v / (_h(_floor(frac(a + b, 2)) - 1) * _h(_ceil(frac(a + c, 2)) + 1) * _h(frac(b + c, 2)))
        v = v * _h(m + _ceil(frac(a + b + c, 2))) * _h(m + _floor(frac(a + b + c, 2)))
        v = v / (_h(_floor(frac(a + c, 2)) + m - 1) * _h(frac(b + c, 2) + m) * _h(_ceil(frac(a + b, 2)) + m + 1))
        if a % 2 == 0:
            p = ((a + b) ** 2 - 1) * ((a + c) ** 2 - 1) + 4 * a * m * (
                a * a + 2 * a * b + b * b + 2 * a * c + 3 * b * c + c * c
                + 2 * a * m + 3 * b * m + 3 * c * m + 2 * m * m - 1
            )
        else:
            p = ((a + b) ** 2 - 1) * ((a + c) ** 2 - 1) + 4 * (a + b + c + m) * m * (
                a * a + b * c - 1
            )
        return Fraction(1, 16) * v.to_rational() * p
    raise FormulaDomainError("which must be 1 or 2")


# --- the transformed-determinant evaluations (eight parity branches) -------


def lemma_rhs(a: int, b: Number, c: Number, m: int, shifted: bool = False) -> Fraction:
    """Value of the transformed cored-hexagon determinant D1 (unshifted) or
    D2 (shifted), by the parity of a and m.  Polynomial identities in b and
    c, so rational b, c are allowed."""
    b, c = frac(b), frac(c)
    two_exp = frac(m * (a + m - 1), 2)
    if not shifted:
        if a % 2 == 0 and m % 2 == 0:
            v = _h(a + m) * _h(a // 2) ** 2 * _h(m // 2) ** 2
            v = v / _h(frac(a + m, 2)) ** 2
            r = v.to_rational() / Fraction(2) ** int(two_exp)
            for k in range(1, m // 2 + 1):
                r *= frac(pochhammer(b / 2 + k, a // 2)) ** 2
                r *= frac(pochhammer(c / 2 + k, a // 2)) ** 2
            for k in range(a // 2):
                r *= (b + c + m + 2 * k + 1) ** (a - 2 * k - 1)
            for k in range(1, a // 2):
                r *= (b + c + 2 * m + 2 * k) ** (a - 2 * k)
            for k in range(m // 2 + 1, m + 1):
                r *= (b + c + 2 * k) ** (a + m - k)
            for k in range(1, m // 2 + 1):
                r *= (b + c + 2 * k) ** (m - k)
            return r
        if a % 2 == 1 and m % 2 == 0:
            v = _h(a + m) * _h((a - 1) // 2) * _h((a + 1) // 2) * _h(m // 2) ** 2
            v = v / (_h(frac(a + m - 1, 2)) * _h(frac(a + m + 1, 2)))
            r = v.to_rational() / Fraction(2) ** int(two_exp)
            for k in range(1, m // 2 + 1):
                r *= frac(pochhammer((b - 1) / 2 + k, (a + 1) // 2))
                r *= frac(pochhammer((b + 1) / 2 + k, (a - 1) // 2))
                r *= frac(pochhammer((c - 1) / 2 + k, (a + 1) // 2))
                r *= frac(pochhammer((c + 1) / 2 + k, (a - 1) // 2))
            for k in range((a - 1) // 2):
                r *= (b + c + m + 2 * k + 1) ** (a - 2 * k - 1)
            for k in range(1, (a - 1) // 2 + 1):
                r *= (b + c + 2 * m + 2 * k) ** (a - 2 * k)
            for k in range(m // 2 + 1, m + 1):
                r *= (b + c + 2 * k) ** (a + m - k)
            for k in range(1, m // 2 + 1):
                r *= (b + c + 2 * k) ** (m - k)
            return r
        if a % 2 == 0 and m % 2 == 1:
            v = _h(a + m) * _h(a // 2) ** 2 * _h(frac(m - 1, 2)) * _h(frac(m + 1, 2))
            v = v / (_h(frac(a + m - 1, 2)) * _h(frac(a + m + 1, 2)))
            r = v.to_rational() / Fraction(2) ** int(two_exp)
            r *= frac(pochhammer(b / 2 + frac(1 + m, 2), a // 2))
            r *= frac(pochhammer(c / 2 + frac(1 + m, 2), a // 2))
            for k in range(1, (m - 1) // 2 + 1):
                r *= frac(pochhammer(b / 2 + k, a // 2)) ** 2
                r *= frac(pochhammer(c / 2 + k, a // 2)) ** 2
            for k in range(1, a // 2):
                r *= (b + c + 2 * k + m) ** (a - 2 * k)
                r *= (b + c + 2 * k + 2 * m) ** (a - 2 * k)
            for k in range((m - 1) // 2 + 1):
                r *= (1 + b + c + 2 * k + m) ** a
            for k in range(1, m + 1):
                r *= (b + c + 2 * k) ** (m - k)
            return (-1) ** (a // 2) * r
        return Fraction(0)
    # shifted: the D2 matrix
    if a % 2 == 0 and m % 2 == 0:
        v = _h(a + m) * _h(a // 2) ** 2 * _h(m // 2) ** 2
        v = v / _h(frac(a + m, 2)) ** 2
        r = v.to_rational() / Fraction(2) ** int(two_exp)
        for k in range(1, m // 2 + 1):
            r *= frac(pochhammer((b - 1) / 2 + k, a // 2))
            r *= frac(pochhammer((b + 1) / 2 + k, a // 2))
            r *= frac(pochhammer((c - 1) / 2 + k, a // 2))
            r *= frac(pochhammer((c + 1) / 2 + k, a // 2))
        for k in range(a // 2):
            r *= (b + c + m + 2 * k + 1) ** (a - 2 * k - 1)
        for k in range(1, a // 2):
            r *= (b + c + 2 * m + 2 * k) ** (a - 2 * k)
        for k in range(m // 2 + 1, m + 1):
            r *= (b + c + 2 * k) ** (a + m - k)
        for k in range(1, m // 2 + 1):
            r *= (b + c + 2 * k) ** (m - k)
        return r
    if a % 2 == 1 and m % 2 == 0:
        v = _h(a + m) * _h((a - 1) // 2) * _h((a + 1) // 2) * _h(m // 2) ** 2
        v = v / (_h(frac(a + m - 1, 2)) * _h(frac(a + m + 1, 2)))
        r = v.to_rational() / Fraction(2) ** int(two_exp)
        for k in range(1, m // 2 + 1):
            r *= frac(pochhammer(b / 2 + k, (a - 1) // 2))
            r *= frac(pochhammer(b / 2 + k, (a + 1) // 2))
            r *= frac(pochhammer(c / 2 + k, (a - 1) // 2))
            r *= frac(pochhammer(c / 2 + k, (a + 1) // 2))
        for k in range((a - 3) // 2 + 1):
            r *= (b + c + m + 2 * k + 1) ** (a - 2 * k - 1)
        for k in range(1, (a - 1) // 2 + 1):
            r *= (b + c + 2 * m + 2 * k) ** (a - 2 * k)
        for k in range(m // 2 + 1, m + 1):
            r *= (b + c + 2 * k) ** (a + m - k)
        for k in range(1, m // 2 + 1):
            r *= (b + c + 2 * k) ** (m - k)
        return r
    if a % 2 == 0 and m % 2 == 1:
        v = _h(a + m) * _h(a // 2) ** 2 * _h(frac(m - 1, 2)) * _h(frac(m + 1, 2))
        v = v / (_h(frac(a + m - 1, 2)) * _h(frac(a + m + 1, 2)))
        r = v.to_rational() / Fraction(2) ** int(two_exp)
        for k in range(1, (m + 1) // 2 + 1):
            r *= frac(pochhammer((b - 1) / 2 + k, a // 2))
            r *= frac(pochhammer((c - 1) / 2 + k, a // 2))
        for k in range(1, (m - 1) // 2 + 1):
            r *= frac(pochhammer((b + 1) / 2 + k, a // 2))
            r *= frac(pochhammer((c + 1) / 2 + k, a // 2))
        for k in range(1, a // 2):
            r *= (b + c + m + 2 * k) ** (a - 2 * k)
            r *= (b + c + 2 * m + 2 * k) ** (a - 2 * k)
        for k in range((m + 1) // 2, m + 1):
            r *= (b + c + 2 * k) ** (a + m - k)
        for k in range(1, (m - 1) // 2 + 1):
            r *= (b + c + 2 * k) ** (m - k)
        return (-1) ** (a // 2) * r
    # a odd, m odd
    v = _h(a + m) * _h((a - 1) // 2) * _h((a + 1) // 2)
    v = v * _h(frac(m - 1, 2)) * _h(frac(m + 1, 2))
    v = v / _h((a + m) // 2) ** 2
    r = v.to_rational() / Fraction(2) ** int(two_exp + Fraction(1, 2))
    for k in range(1, (m + 1) // 2 + 1):
        r *= frac(pochhammer(b / 2 + k, (a - 1) // 2))
        r *= frac(pochhammer(c / 2 + k, (a - 1) // 2))
    for k in range(1, (m - 1) // 2 + 1):
        r *= frac(pochhammer(b / 2 + k, (a + 1) // 2))
        r *= frac(pochhammer(c / 2 + k, (a + 1) // 2))
    for k in range(1, (a - 1) // 2 + 1):
        r *= (b + c + m + 2 * k) ** (a - 2 * k)
        r *= (b + c + 2 * m + 2 * k) ** (a - 2 * k)
    for k in range((m + 1) // 2, m + 1):
        r *= (b + c + 2 * k) ** (a + m - k)
    for k in range(1, (m - 1) // 2 + 1):
        r *= (b + c + 2 * k) ** (m - k)
    return (-1) ** ((a + 1) // 2) * r


# --- multiple-sum analogues of Watson's summation ---------------------------


def _watson_lower_params(variant: str, a: int, M: int, B: Fraction, C: Fraction):
    if variant == W1:
        return Fraction(a - M, 2) + C / 2, 2 * B + a - 1
    if variant == W2:
        return Fraction(a - M, 2) + C / 2 + Fraction(1, 2), 2 * B + a - 2
    if variant == W3:
        return Fraction(a - M, 2) + C / 2, 2 * B + a - 2
    raise FormulaDomainError(f"unknown variant {variant!r}")


def watson_lhs(variant: str, a: int, M: int, B: Number, C: Number) -> Fraction:
    """The multiple sum over 0 <= k_1 < ... < k_a <= M with squared
    Vandermonde weight."""
    B, C = frac(B), frac(C)
    low1, low2 = _watson_lower_params(variant, a, M, B, C)
    # per-k factors, with pole detection on the lower parameters
    factors = []
    for k in range(M + 1):
        num = frac(pochhammer(-M, k)) * frac(pochhammer(C, k)) * frac(pochhammer(B, k))
        for low in (low1, low2):
            for t in range(k):
                if low + t == 0:
                    raise PochhammerZeroError(low, k)
        den = (
            Fraction(math.factorial(k))
            * frac(pochhammer(low1, k))
            * frac(pochhammer(low2, k))
        )
        factors.append(num / den)
    total = Fraction(0)
    for ks in combinations(range(M + 1), a):
        vand = 1
        for i in range(a):
            for j in range(i + 1, a):
                vand *= (ks[i] - ks[j]) ** 2
        term = Fraction(vand)
        for k in ks:
            term *= factors[k]
        total += term
    return total


def _p(base: Number, k: Number) -> Fraction:
    k = frac(k)
    assert k.denominator == 1 and k >= 0, f"pochhammer length {k} must be in N"
    return frac(pochhammer(frac(base), int(k)))


def _f(x: Number) -> Fraction:
    x = frac(x)
    assert x.denominator == 1 and x >= 0, f"factorial argument {x} must be in N"
    return Fraction(math.factorial(int(x)))


def watson_rhs(variant: str, a: int, M: int, B: Number, C: Number) -> Fraction:
    """The closed-form side, one expression per parity branch of (a, M)."""
    B, C = frac(B), frac(C)
    if M < a:
        # fewer than a admissible indices: the sum is empty
        return Fraction(0)
    a2, M2, C2 = Fraction(a, 2), Fraction(M, 2), C / 2
    common = Fraction(2) ** (a * a - a - a * M) * _f(M) ** a
    for i in range(1, a + 1):
        common *= _p(B, i - 1)
    if variant == W1:
        if a % 2 == 0 and M % 2 == 0:
            v = common * (-1) ** (a // 2) / _p(a2 + C2 - M2, M2 - a2) ** a
            for i in range(1, a // 2 + 1):
                v *= _f(i - 1) ** 2 * _p(Fraction(1, 2) + C2, i - 1) ** 2
                v *= _p(B - C2 + i - 1, M2 - a2 + 1) * _p(B - C2 + i, M2 - a2)
                v /= _f(M2 - i) * _f(M2 - i + 1)
                v /= _p(a2 + B - Fraction(1, 2), M2 - i + 1) ** 2
                v /= _p(a2 + B, i - 1) ** 2 * _p(1 + C2 - i + M2, 2 * i - 1)
            return v
        if a % 2 == 0 and M % 2 == 1:
            v = common * (-1) ** (a // 2) / _p(a2 + C2 - M2, M2 - a2 + Fraction(1, 2)) ** a
            for i in range(1, a // 2 + 1):
                v *= _f(i - 1) ** 2 / _f(M2 - i + Fraction(1, 2)) ** 2
            for i in range(1, a // 2 + 1):
                v *= _p(C2, i - 1) * _p(C2, i)
                v *= _p(B - C2 + i - Fraction(1, 2), M2 - a2 + Fraction(1, 2)) ** 2
                v /= _p(a2 + B - Fraction(1, 2), M2 - i + Fraction(1, 2))
                v /= _p(a2 + B - Fraction(1, 2), M2 - i + Fraction(3, 2))
                v /= _p(a2 + B, i - 1) ** 2 * _p(1 + C2 - i + M2, 2 * i - 1)
            return v
        if a % 2 == 1 and M % 2 == 0:
            v = common * (-1) ** (M // 2)
            v *= _p(B - C2 + a2, M2 - a2 + Fraction(1, 2))
            v /= _f(M2) * _p(a2 + B, M2) * _p(a2 + C2 - M2, M2 - a2 + Fraction(1, 2)) ** a
            for i in range(1, (a - 1) // 2 + 1):
                v *= _f(i - 1) * _f(i) * _p(C2, i) ** 2
                v *= _p(B - C2 + i - Fraction(1, 2), M2 - a2 + Fraction(1, 2)) ** 2
                v /= _f(M2 - i) ** 2
                v /= _p(a2 + B - Fraction(1, 2), i) ** 2 * _p(a2 + B, M2 - i) ** 2
                v /= _p(Fraction(1, 2) + C2 - i + M2, 2 * i)
            return v
        return Fraction(0)
    if variant == W2:
        if a % 2 == 0 and M % 2 == 0:
            v = common * (-1) ** (a // 2)
            v /= _p(Fraction(1, 2) + a2 + C2 - M2, M2 - a2) ** a
            for i in range(1, a // 2 + 1):
                v *= _f(i - 1) ** 2 * _p(C2, i - 1) * _p(C2, i)
                v /= _f(M2 - i) * _f(M2 - i + 1)
                v /= _p(a2 + B - 1, i - 1) * _p(a2 + B - 1, i)
            for i in range(1, a // 2 + 1):
                v *= _p(B - C2 + i - Fraction(3, 2), M2 - a2 + 1)
                v *= _p(B - C2 + i - Fraction(1, 2), M2 - a2)
                v /= _p(a2 + B - Fraction(1, 2), M2 - i)
                v /= _p(a2 + B - Fraction(1, 2), M2 - i + 1)
                v /= _p(Fraction(1, 2) + C2 - i + M2, 2 * i)
            return v
        if a % 2 == 0 and M % 2 == 1:
            v = common * (-1) ** (a // 2)
            v /= _p(Fraction(1, 2) + a2 + C2 - M2, M2 - a2 - Fraction(1, 2)) ** a
            for i in range(1, a // 2 + 1):
                v *= _f(i - 1) ** 2 / _f(M2 - i + Fraction(1, 2)) ** 2
            for i in range(1, a // 2 + 1):
                v *= _p(Fraction(1, 2) + C2, i - 1) ** 2
                v *= _p(B - C2 + i - 1, M2 - a2 + Fraction(1, 2)) ** 2
                v /= _p(a2 + B - 1, i - 1) * _p(a2 + B - 1, i)
                v /= _p(a2 + B - Fraction(1, 2), M2 - i + Fraction(1, 2)) ** 2
                v /= _p(Fraction(1, 2) + C2 - i + M2, 2 * i)
            return v
        if a % 2 == 1 and M % 2 == 0:
            v = common * (-1) ** (M // 2)
            v *= _p(B - C2 + a2 - Fraction(1, 2), M2 - a2 + Fraction(1, 2))
            v /= (C2 + M2) * _f(M2) * _p(a2 + B - 1, M2 - a2 + Fraction(1, 2))
            v /= _p(Fraction(1, 2) + a2 + C2 - M2, M2 - a2 - Fraction(1, 2)) ** a
            for i in range(1, (a - 1) // 2 + 1):
                v *= _f(i - 1) * _f(i)
                v *= _p(Fraction(1, 2) + C2, i - 1) * _p(Fraction(1, 2) + C2, i)
                v /= _f(M2 - i) ** 2 * _p(a2 + B - 1, M2 - i + 1) ** 2
            for i in range(1, (a - 1) // 2 + 1):
                v *= _p(B - C2 + i - 1, M2 - a2 + Fraction(1, 2)) ** 2
                v /= _p(a2 + B - Fraction(1, 2), i - 1) * _p(a2 + B - Fraction(1, 2), i)
                v /= _p(C2 - i + M2, 2 * i + 1)
            return v
        # both odd
        v = common * (-1) ** ((M - 1) // 2)
        v *= _p(B - C2 - Fraction(1, 2), M2 - a2 + 1)
        v /= (C2 + M2) * _f(M2 - a2) * _p(a2 + B - 1, M2 + Fraction(1, 2))
        v /= _p(Fraction(1, 2) + a2 + C2 - M2, M2 - a2) ** a
        for i in range(1, (a - 1) // 2 + 1):
            v *= _f(i - 1) * _f(i) * _p(C2, i) ** 2
            v /= _f(M2 - i + Fraction(1, 2)) ** 2
            v /= _p(a2 + B - 1, M2 - i + Fraction(1, 2)) ** 2
        for i in range(1, (a - 1) // 2 + 1):
            v *= _p(B - C2 + i - Fraction(1, 2), M2 - a2)
            v *= _p(B - C2 + i - Fraction(1, 2), M2 - a2 + 1)
            v /= _p(a2 + B - Fraction(1, 2), i - 1) * _p(a2 + B - Fraction(1, 2), i)
            v /= _p(C2 - i + M2, 2 * i + 1)
        return v
    if variant == W3:
        if a % 2 == 0 and M % 2 == 0:
            v = common * (-1) ** (a // 2)
            v /= _p(a2 + B - 1, a2) * _p(a2 + C2 - M2, M2 - a2) ** a
            for i in range(1, a // 2 + 1):
                v *= _f(i - 1) ** 2 / (_f(M2 - i) * _f(M2 - i + 1))
            for i in range(1, a // 2 + 1):
                v *= _p(Fraction(1, 2) + C2, i - 1) ** 2
                v *= _p(B - C2 + i - 1, M2 - a2) * _p(B - C2 + i - 1, M2 - a2 + 1)
                v /= _p(a2 + B - 1, i - 1) ** 2
                v /= _p(a2 + B - Fraction(1, 2), M2 - i)
                v /= _p(a2 + B - Fraction(1, 2), M2 - i + 1)
                v /= _p(1 + C2 - i + M2, 2 * i - 1)
            return v
        if a % 2 == 0 and M % 2 == 1:
            v = common * (-1) ** (a // 2)
            v /= _p(a2 + C2 - M2, M2 - a2 + Fraction(1, 2)) ** a
            for i in range(1, a // 2 + 1):
                v *= _f(i - 1) ** 2 / _f(M2 - i + Fraction(1, 2)) ** 2
            for i in range(1, a // 2 + 1):
                v *= _p(C2, i - 1) * _p(C2, i)
                v *= _p(B - C2 + i - Fraction(3, 2), M2 - a2 + Fraction(1, 2))
                v *= _p(B - C2 + i - Fraction(1, 2), M2 - a2 + Fraction(1, 2))
                v /= _p(a2 + B - 1, i - 1) * _p(a2 + B - 1, i)
                v /= _p(a2 + B - Fraction(1, 2), M2 - i + Fraction(1, 2)) ** 2
                v /= _p(1 + C2 - i + M2, 2 * i - 1)
            return v
        if a % 2 == 1 and M % 2 == 0:
            v = common * (-1) ** (M // 2)
            v *= _p(B - C2 - Fraction(1, 2), M2 - a2 + Fraction(1, 2))
            v /= _f(M2) * _p(a2 + B - 1, M2 - a2 + Fraction(1, 2))
            v /= _p(a2 + C2 - M2, M2 - a2 + Fraction(1, 2)) ** a
            for i in range(1, (a - 1) // 2 + 1):
                v *= _f(i - 1) * _f(i) * _p(C2, i) ** 2
                v /= _f(M2 - i) ** 2 * _p(a2 + B - 1, M2 - i + 1) ** 2
            for i in range(1, (a - 1) // 2 + 1):
                v *= _p(B - C2 + i - Fraction(1, 2), M2 - a2 + Fraction(1, 2)) ** 2
                v /= _p(a2 + B - Fraction(1, 2), i - 1) * _p(a2 + B - Fraction(1, 2), i)
                v /= _p(Fraction(1, 2) + C2 - i + M2, 2 * i)
            return v
        # both odd
        v = common * (-1) ** ((M + 1) // 2)
        v *= _p(B - C2 + a2 - Fraction(1, 2), M2 - a2)
        v /= _f(M2 - a2) * _p(a2 + B - 1, M2 + Fraction(1, 2))
        v /= _p(a2 + C2 - M2, M2 - a2) ** a
        for i in range(1, (a - 1) // 2 + 1):
            v *= _f(i - 1) * _f(i)
            v *= _p(Fraction(1, 2) + C2, i - 1) * _p(Fraction(1, 2) + C2, i)
            v /= _f(M2 - i + Fraction(1, 2)) ** 2
            v /= _p(a2 + B - 1, M2 - i + Fraction(1, 2)) ** 2
        for i in range(1, (a - 1) // 2 + 1):
            v *= _p(B - C2 + i - 1, M2 - a2) * _p(B - C2 + i - 1, M2 - a2 + 1)
            v /= _p(a2 + B - Fraction(1, 2), i - 1) * _p(a2 + B - Fraction(1, 2), i)
            v /= _p(Fraction(1, 2) + C2 - i + M2, 2 * i)
        return v
    raise FormulaDomainError(f"unknown variant {variant!r}")


def watson_pair(variant: str, a: int, M: int, B: Number, C: Number) -> tuple[Fraction, Fraction]:
    """(multiple sum, closed form) for one of the three summation theorems."""
    if a < 1 or M < 0:
        raise FormulaDomainError("need a >= 1 and M >= 0")
    return watson_lhs(variant, a, M, B, C), watson_rhs(variant, a, M, B, C)


def watson_3f2_closed(M: int, B: Number, C: Number) -> Fraction:
    """The terminating Watson 3F2 sum, with the gamma quotients of the
    classical evaluation rewritten as Pochhammer ratios so that arbitrary
    rational parameters stay exact.  Zero for odd M."""
    B, C = frac(B), frac(C)
    if M % 2 == 1:
        return Fraction(0)
    half = M // 2
    v = frac(pochhammer(Fraction(1 - M, 2), half))
    v *= frac(pochhammer(Fraction(1, 2) - C / 2 + B, half))
    v /= frac(pochhammer(Fraction(1, 2) + B, half))
    v /= frac(pochhammer(Fraction(1 - M, 2) + C / 2, half))
    return v
