"""Exact arithmetic building blocks.

Everything downstream (region counts, determinants, product formulas) is
computed over arbitrary-precision integers, rationals, rationals scaled by
powers of sqrt(pi), or one of the two cyclotomic rings Z[w] with w a
primitive third or sixth root of unity.  No floats live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
Number = Union[int, Fraction]

THIRD = "third"
SIXTH = "sixth"


def frac(x: Number, denominator: int | None = None) -> Fraction:
    """Coerce to Fraction; with two arguments, the fraction x/denominator."""
    if denominator is not None:
        return Fraction(x, denominator)
    return x if isinstance(x, Fraction) else Fraction(x)


def is_integer(x: Number) -> bool:
    return isinstance(x, int) or x.denominator == 1


def is_half_integer(x: Number) -> bool:
    """True for odd multiples of 1/2."""
    return isinstance(x, Fraction) and x.denominator == 2


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def double_factorial_odd(i: int) -> int:
    """(2i-1)!! = 1*3*5*...*(2i-1); the empty product for i = 0."""
    if i < 0:
        raise ValueError("negative double factorial index")
    return math.factorial(2 * i) // (2**i * math.factorial(i))


def binomial(top: Number, bottom: int) -> Number:
    """Generalized binomial coefficient via falling factorials.

    Valid for negative and rational ``top``; ``bottom < 0`` gives 0, which is
    the convention that makes the lattice-path matrices vanish outside the
    admissible index range.
    """
    if bottom < 0:
        return 0
    if isinstance(top, Fraction) and top.denominator == 1:
        top = int(top)
    num: Number = 1
    for i in range(bottom):
        num = num * (top - i)
    if isinstance(num, int):
        return num // math.factorial(bottom)
    return num / math.factorial(bottom)


def pochhammer(base: Number, k: int) -> Number:
    """Shifted factorial (base)_k = base*(base+1)*...*(base+k-1); (base)_0 = 1."""
    if k < 0:
        raise ValueError(f"pochhammer with negative index {k}")
    result: Number = 1
    for i in range(k):
        result = result * (base + i)
    return result


@dataclass(frozen=True)
class SqrtPiScaled:
    """An exact value coefficient * pi**(half_pi_exponent/2).

    The exponent bookkeeping makes cancellation checkable: any quantity that
    is supposed to be rational must come out with half_pi_exponent == 0.
    """

    coefficient: Fraction
    half_pi_exponent: int

    @staticmethod
    def of(coefficient: Number, half_pi_exponent: int = 0) -> SqrtPiScaled:
        c = frac(coefficient)
        if c == 0:
            half_pi_exponent = 0
        return SqrtPiScaled(c, half_pi_exponent)

    def __mul__(self, other: SqrtPiScaled | Number) -> SqrtPiScaled:
        if isinstance(other, SqrtPiScaled):
            return SqrtPiScaled.of(
                self.coefficient * other.coefficient,
                self.half_pi_exponent + other.half_pi_exponent,
            )
        return SqrtPiScaled.of(self.coefficient * frac(other), self.half_pi_exponent)

    __rmul__ = __mul__

    def __truediv__(self, other: SqrtPiScaled | Number) -> SqrtPiScaled:
        if isinstance(other, SqrtPiScaled):
            if other.coefficient == 0:
                raise ZeroDivisionError("division by exact zero")
            return SqrtPiScaled.of(
                self.coefficient / other.coefficient,
                self.half_pi_exponent - other.half_pi_exponent,
            )
        return SqrtPiScaled.of(self.coefficient / frac(other), self.half_pi_exponent)

    def __rtruediv__(self, other: Number) -> SqrtPiScaled:
        return SqrtPiScaled.of(frac(other)) / self

    def __neg__(self) -> SqrtPiScaled:
        return SqrtPiScaled.of(-self.coefficient, self.half_pi_exponent)

    def __pow__(self, n: int) -> SqrtPiScaled:
        if self.coefficient == 0 and n < 0:
            raise ZeroDivisionError("division by exact zero")
        return SqrtPiScaled.of(self.coefficient**n, self.half_pi_exponent * n)

    @property
    def is_rational(self) -> bool:
        return self.half_pi_exponent == 0

    def to_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(
                f"value carries pi**({self.half_pi_exponent}/2); "
                "a sqrt(pi) leak indicates a transcription error"
            )
        return self.coefficient


SQRTPI_ONE = SqrtPiScaled.of(1)


def gamma_half_integer(x: Number) -> SqrtPiScaled:
    """Gamma(x) for x a positive integer or any half-integer (may be negative).

    Half-integer values are exact rational multiples of sqrt(pi); Gamma has
    poles only at nonpositive integers, which are rejected.
    """
    x = frac(x)
    if x.denominator == 1:
        n = int(x)
        if n <= 0:
            raise ValueError(f"gamma pole at nonpositive integer {n}")
        return SqrtPiScaled.of(math.factorial(n - 1))
    if x.denominator != 2:
        raise ValueError(f"gamma argument {x} is neither integer nor half-integer")
    # Walk from Gamma(1/2) = sqrt(pi) using Gamma(t+1) = t*Gamma(t).
    coeff = Fraction(1)
    t = Fraction(1, 2)
    while t < x:
        coeff *= t
        t += 1
    while t > x:
        t -= 1
        coeff /= t
    return SqrtPiScaled.of(coeff, 1)


def factorial_exact(x: Number) -> SqrtPiScaled:
    """x! = Gamma(x+1) for x a nonnegative integer or any half-integer."""
    x = frac(x)
    if x.denominator == 1:
        n = int(x)
        if n < 0:
            raise ValueError(f"factorial of negative integer {n}")
        return SqrtPiScaled.of(math.factorial(n))
    return gamma_half_integer(x + 1)


def hyperfactorial(n: Number) -> SqrtPiScaled:
    """h(n) = prod_{k<n} k! for integer n; for half-integer n the product
    of Gamma(k+1/2), k = 0..n-1/2, tracked exactly with its sqrt(pi) power."""
    n = frac(n)
    if n < Fraction(-1, 2):
        raise ValueError(f"hyperfactorial of negative argument {n}")
    if n.denominator == 1:
        result = 1
        f = 1
        for k in range(1, int(n)):
            f *= k
            result *= f
        return SqrtPiScaled.of(result)
    if n.denominator != 2:
        raise ValueError(f"hyperfactorial argument {n} is neither integer nor half-integer")
    # Gamma(k+1/2) = (2k)! / (4^k k!) * sqrt(pi)
    count = int(n + Fraction(1, 2))
    coeff = Fraction(1)
    for k in range(count):
        coeff *= Fraction(math.factorial(2 * k), 4**k * math.factorial(k))
    return SqrtPiScaled.of(coeff, count)


class RingMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class CycloElement:
    """c0 + c1*tau with tau a primitive third (tau^2 = -1-tau) or sixth
    (tau^2 = tau-1) root of unity.  Coordinates are rational because the
    closed-form determinant values multiply root-of-unity powers by
    rational products."""

    ring: str
    c0: Fraction
    c1: Fraction

    @staticmethod
    def of(ring: str, c0: Number, c1: Number = 0) -> CycloElement:
        if ring not in (THIRD, SIXTH):
            raise ValueError(f"unknown cyclotomic ring {ring!r}")
        return CycloElement(ring, frac(c0), frac(c1))

    @staticmethod
    def from_rational(ring: str, value: Number) -> CycloElement:
        return CycloElement.of(ring, value, 0)

    def _coerce(self, other: CycloElement | Number) -> CycloElement:
        if isinstance(other, CycloElement):
            if other.ring != self.ring:
                if other.c1 == 0:
                    return CycloElement.of(self.ring, other.c0)
                raise RingMismatchError(
                    f"cannot mix rings {self.ring!r} and {other.ring!r}"
                )
            return other
        return CycloElement.of(self.ring, other)

    def __add__(self, other: CycloElement | Number) -> CycloElement:
        o = self._coerce(other)
        return CycloElement.of(self.ring, self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __sub__(self, other: CycloElement | Number) -> CycloElement:
        o = self._coerce(other)
        return CycloElement.of(self.ring, self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other: Number) -> CycloElement:
        return self._coerce(other) - self

    def __neg__(self) -> CycloElement:
        return CycloElement.of(self.ring, -self.c0, -self.c1)

    def __mul__(self, other: CycloElement | Number) -> CycloElement:
        o = self._coerce(other)
        a, b, c, d = self.c0, self.c1, o.c0, o.c1
        if self.ring == THIRD:
            # tau^2 = -1 - tau
            return CycloElement.of(THIRD, a * c - b * d, a * d + b * c - b * d)
        # tau^2 = tau - 1
        return CycloElement.of(SIXTH, a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conjugate(self) -> CycloElement:
        if self.ring == THIRD:
            # tau -> -1 - tau
            return CycloElement.of(THIRD, self.c0 - self.c1, -self.c1)
        # tau -> 1 - tau
        return CycloElement.of(SIXTH, self.c0 + self.c1, -self.c1)

    def norm(self) -> Fraction:
        product = self * self.conjugate()
        assert product.c1 == 0, "norm must be rational"
        return product.c0

    def inverse(self) -> CycloElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by exact zero")
        conj = self.conjugate()
        return CycloElement.of(self.ring, conj.c0 / n, conj.c1 / n)

    def __truediv__(self, other: CycloElement | Number) -> CycloElement:
        return self * self._coerce(other).inverse()

    def __pow__(self, n: int) -> CycloElement:
        base = self if n >= 0 else self.inverse()
        result = CycloElement.of(self.ring, 1)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloElement):
            if self.ring == other.ring:
                return self.c0 == other.c0 and self.c1 == other.c1
            return self.c1 == 0 and other.c1 == 0 and self.c0 == other.c0
        if isinstance(other, (int, Fraction)):
            return self.c1 == 0 and self.c0 == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.c1 == 0:
            return hash(self.c0)
        return hash((self.ring, self.c0, self.c1))

    @property
    def is_rational(self) -> bool:
        return self.c1 == 0

    def to_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.c0

    def to_ring(self, ring: str) -> CycloElement:
        """Rewrite in the other ring; Z[w3] and Z[w6] are the same set,
        linked by w6 = 1 + w3."""
        if ring == self.ring:
            return self
        if self.ring == THIRD and ring == SIXTH:
            # a + b*w3 = (a - b) + b*w6
            return CycloElement.of(SIXTH, self.c0 - self.c1, self.c1)
        if self.ring == SIXTH and ring == THIRD:
            # a + b*w6 = (a + b) + b*w3
            return CycloElement.of(THIRD, self.c0 + self.c1, self.c1)
        raise ValueError(f"unknown cyclotomic ring {ring!r}")

    def __repr__(self) -> str:
        return f"CycloElement({self.ring!r}, {self.c0}, {self.c1})"


def omega3() -> CycloElement:
    """A primitive third root of unity."""
    return CycloElement.of(THIRD, 0, 1)


def omega6() -> CycloElement:
    """A primitive sixth root of unity."""
    return CycloElement.of(SIXTH, 0, 1)


def value_to_str(value) -> str:
    """Decimal-string form used by the CLI: integers plain, rationals p/q."""
    if isinstance(value, SqrtPiScaled):
        value = value.to_rational()
    if isinstance(value, CycloElement):
        if value.is_rational:
            value = value.c0
        else:
            raise ValueError("use cyclo_to_dict for non-rational cyclotomic values")
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def cyclo_to_dict(value: CycloElement) -> dict:
    return {
        "ring": value.ring,
        "c0": value_to_str(value.c0),
        "c1": value_to_str(value.c1),
    }
