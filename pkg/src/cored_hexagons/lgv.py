"""Exact matrices for the lattice-path determinants and their evaluation.

One fraction-free elimination kernel serves all four rings; every division
it performs is exact in the ring and asserted as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, gcd

from .exactnum import (
    CycloElement,
    Number,
    SIXTH,
    THIRD,
    binomial,
    frac,
    pochhammer,
    value_to_str,
)

RING_INTEGER = "integer"
RING_RATIONAL = "rational"
RING_CYCLO3 = "cyclo3"
RING_CYCLO6 = "cyclo6"

RINGS = (RING_INTEGER, RING_RATIONAL, RING_CYCLO3, RING_CYCLO6)


def _ring_of(value) -> str:
    if isinstance(value, CycloElement):
        return RING_CYCLO3 if value.ring == THIRD else RING_CYCLO6
    if isinstance(value, Fraction) and value.denominator != 1:
        return RING_RATIONAL
    return RING_INTEGER


def _join_rings(rings) -> str:
    order = {RING_INTEGER: 0, RING_RATIONAL: 1, RING_CYCLO3: 2, RING_CYCLO6: 2}
    best = RING_INTEGER
    for ring in rings:
        if ring in (RING_CYCLO3, RING_CYCLO6) and best in (RING_CYCLO3, RING_CYCLO6):
            if ring != best:
                raise ValueError("cannot mix the two cyclotomic rings")
        if order[ring] > order[best]:
            best = ring
    return best


def _exact_div(num, den, ring: str):
    if ring == RING_INTEGER:
        q, r = divmod(num, den)
        assert r == 0, "fraction-free elimination requires exact division"
        return q
    return num / den


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix over one exact ring."""

    ring: str
    rows: tuple[tuple, ...]

    @staticmethod
    def of(rows, ring: str | None = None) -> ExactMatrix:
        rows = tuple(tuple(r) for r in rows)
        if ring is None:
            ring = _join_rings(_ring_of(v) for row in rows for v in row)
        if ring == RING_INTEGER:
            rows = tuple(
                tuple(int(v) if isinstance(v, Fraction) else v for v in row)
                for row in rows
            )
        elif ring == RING_RATIONAL:
            rows = tuple(tuple(frac(v) for v in row) for row in rows)
        return ExactMatrix(ring, rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def submatrix(self, row_indices, col_indices) -> ExactMatrix:
        return ExactMatrix(
            self.ring,
            tuple(tuple(self.rows[i][j] for j in col_indices) for i in row_indices),
        )


def _zero_like(ring: str):
    if ring == RING_CYCLO3:
        return CycloElement.of(THIRD, 0)
    if ring == RING_CYCLO6:
        return CycloElement.of(SIXTH, 0)
    if ring == RING_RATIONAL:
        return Fraction(0)
    return 0


def _one_like(ring: str):
    if ring == RING_CYCLO3:
        return CycloElement.of(THIRD, 1)
    if ring == RING_CYCLO6:
        return CycloElement.of(SIXTH, 1)
    if ring == RING_RATIONAL:
        return Fraction(1)
    return 1


def det_fraction_free(matrix: ExactMatrix):
    """Single-step (Bareiss) fraction-free determinant; rational matrices are
    scaled row-wise to integers first to keep the hot loop in Z."""
    if matrix.nrows != matrix.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = matrix.nrows
    if n == 0:
        return _one_like(matrix.ring)

    if matrix.ring == RING_RATIONAL:
        scale = Fraction(1)
        int_rows = []
        for row in matrix.rows:
            lcm = 1
            for v in row:
                d = frac(v).denominator
                lcm = lcm * d // gcd(lcm, d)
            scale /= lcm
            int_rows.append([int(v * lcm) for v in row])
        return scale * det_fraction_free(ExactMatrix.of(int_rows, RING_INTEGER))

    ring = matrix.ring
    m = [list(row) for row in matrix.rows]
    zero = _zero_like(ring)
    sign = 1
    prev = _one_like(ring)
    for k in range(n - 1):
        if m[k][k] == zero:
            for i in range(k + 1, n):
                if m[i][k] != zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(pivot * m[i][j] - m[i][k] * m[k][j], prev, ring)
            m[i][k] = zero
        prev = pivot
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def matrix_to_text(matrix: ExactMatrix) -> str:
    lines = [f"ring {matrix.ring} {matrix.nrows} {matrix.ncols}"]
    for row in matrix.rows:
        parts = []
        for v in row:
            if isinstance(v, CycloElement):
                parts.append(f"{value_to_str(v.c0)}+{value_to_str(v.c1)}t")
            else:
                parts.append(value_to_str(frac(v)))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


# --- matrix builders keyed to the lattice-path determinants ---------------


def build_B(N: int, m: int) -> ExactMatrix:
    """The N x N matrix with entries binom(m+i+j, j), 0 <= i, j < N."""
    if N < 0:
        raise ValueError("size must be nonnegative")
    return ExactMatrix.of(
        [[binomial(m + i + j, j) for j in range(N)] for i in range(N)], RING_INTEGER
    )


def identity_matrix(N: int, ring: str = RING_INTEGER) -> ExactMatrix:
    one, zero = _one_like(ring), _zero_like(ring)
    return ExactMatrix.of(
        [[one if i == j else zero for j in range(N)] for i in range(N)], ring
    )


def matrix_add(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    assert (A.nrows, A.ncols) == (B.nrows, B.ncols)
    return ExactMatrix.of(
        [
            [A.rows[i][j] + B.rows[i][j] for j in range(A.ncols)]
            for i in range(A.nrows)
        ]
    )


def matrix_scale(A: ExactMatrix, s) -> ExactMatrix:
    return ExactMatrix.of([[s * v for v in row] for row in A.rows])


def matrix_mul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    assert A.ncols == B.nrows
    rows = []
    for i in range(A.nrows):
        row = []
        for j in range(B.ncols):
            acc = A.rows[i][0] * B.rows[0][j]
            for k in range(1, A.ncols):
                acc = acc + A.rows[i][k] * B.rows[k][j]
            row.append(acc)
        rows.append(row)
    return ExactMatrix.of(rows)


def build_omega_shift(N: int, m: int, omega) -> ExactMatrix:
    """omega*I(N) + B(N, m) over the smallest ring containing omega."""
    if isinstance(omega, CycloElement):
        ring = RING_CYCLO3 if omega.ring == THIRD else RING_CYCLO6
    else:
        ring = RING_INTEGER
    rows = []
    for i in range(N):
        row = []
        for j in range(N):
            v = binomial(m + i + j, j)
            if i == j:
                row.append(omega + v)
            else:
                if isinstance(omega, CycloElement):
                    row.append(CycloElement.of(omega.ring, v))
                else:
                    row.append(v)
        rows.append(row)
    return ExactMatrix.of(rows, ring)


def build_cored_matrix(a: int, b: int, c: int, m: int, epsilon: Number = 0) -> ExactMatrix:
    """The (a+m) x (a+m) lattice-path matrix for the cored hexagon, with the
    core column offset epsilon in {0, 1/2, 1, 3/2}.

    Rows 1..a count paths from the side of length a, rows a+1..a+m paths
    from the core side; 1-based (i, j) as in the row descriptions."""
    if b % 2 != c % 2:
        raise ValueError("b and c must have equal parity")
    eps = frac(epsilon)
    shift = Fraction(b + a, 2) + eps
    if shift.denominator != 1:
        raise ValueError(
            f"(b+a)/2 + epsilon = {shift} must be an integer; pick epsilon from "
            "{0, 1} when a = b (mod 2) and {1/2, 3/2} otherwise"
        )
    shift = int(shift)
    n = a + m
    rows = []
    for i in range(1, a + 1):
        rows.append([binomial(b + c + m, b - i + j) for j in range(1, n + 1)])
    for i in range(a + 1, n + 1):
        rows.append([binomial((b + c) // 2, shift - i + j) for j in range(1, n + 1)])
    return ExactMatrix.of(rows, RING_INTEGER)


def build_n6_matrix(a: int, m: int) -> ExactMatrix:
    """delta_ij + (-1)^j [m+i+j, j]_{q=-1}, 0 <= i, j < a."""
    from .hypergeom import qbinom_neg1

    rows = []
    for i in range(a):
        row = []
        for j in range(a):
            v = (-1) ** j * qbinom_neg1(m + i + j, j)
            row.append(v + (1 if i == j else 0))
        rows.append(row)
    return ExactMatrix.of(rows, RING_INTEGER)


def cored_det_transform(
    a: int, b: int, c: int, m: int, shifted: bool = False
) -> tuple[Fraction, ExactMatrix]:
    """Pull the row factors out of the cored-hexagon matrix.

    Returns (prefactor, D) with prefactor * det(D) = det(build_cored_matrix)
    at epsilon = 0 (unshifted) or 1/2 (shifted); D's entries are the
    Pochhammer products, polynomial in b and c."""
    prefactor = Fraction(1)
    for i in range(1, a + 1):
        prefactor *= Fraction(
            factorial(b + c + m), factorial(b + a + m - i) * factorial(c + m + i - 1)
        )
    for i in range(a + 1, a + m + 1):
        if shifted:
            top = (b + 3 * a + 1) // 2 + m - i
            bottom = (c - a - 1) // 2 + i - 1
        else:
            top = (b + 3 * a) // 2 + m - i
            bottom = (c - a) // 2 + i - 1
        prefactor *= Fraction(factorial((b + c) // 2), factorial(top) * factorial(bottom))
    matrix = transformed_cored_matrix(a, frac(b), frac(c), m, shifted)
    return prefactor, matrix


def transformed_cored_matrix(
    a: int, b: Number, c: Number, m: int, shifted: bool = False
) -> ExactMatrix:
    """The Pochhammer-product matrix D_1 (unshifted) or D_2 (shifted); its
    entries are polynomials in b and c, so rational arguments are allowed."""
    n = a + m
    b, c = frac(b), frac(c)
    half = Fraction(1, 2) if shifted else Fraction(0)
    rows = []
    for i in range(1, a + 1):
        rows.append(
            [
                pochhammer(c + m + i - j + 1, j - 1) * pochhammer(b - i + j + 1, n - j)
                for j in range(1, n + 1)
            ]
        )
    for i in range(a + 1, n + 1):
        rows.append(
            [
                pochhammer((c - a) / 2 - half + i - j + 1, j - 1)
                * pochhammer((b + a) / 2 + half - i + j + 1, n - j)
                for j in range(1, n + 1)
            ]
        )
    return ExactMatrix.of(rows)


def laplace_two_block(matrix: ExactMatrix, top_rows: int):
    """Laplace expansion along the first ``top_rows`` rows:
    sum over column subsets K of (-1)^(sum K - binom(t+1, 2)) times the two
    complementary minors.  Equals the determinant."""
    n = matrix.nrows
    t = top_rows
    total = _zero_like(matrix.ring)
    base = t * (t + 1) // 2
    for K in combinations(range(1, n + 1), t):
        sign = (-1) ** (sum(K) - base)
        top = matrix.submatrix(range(t), [k - 1 for k in K])
        rest_cols = [j for j in range(n) if (j + 1) not in K]
        bottom = matrix.submatrix(range(t, n), rest_cols)
        term = det_fraction_free(top) * det_fraction_free(bottom)
        total = total + (term if sign > 0 else -term)
    return total


# --- the auxiliary determinants used for the -1 evaluation ----------------


def build_Zn(n: int, x: Number, mu: Number) -> ExactMatrix:
    """-delta_ij + sum_{t,k} binom(i+mu, t) binom(k, t) binom(j-k+mu-1, j-k)
    x^(k-t), 0 <= i, j < n."""
    x, mu = frac(x), frac(mu)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Fraction(0)
            for t in range(n):
                bi = binomial(i + mu, t)
                if bi == 0:
                    continue
                for k in range(t, n):
                    bk = comb(k, t)
                    bj = binomial(j - k + mu - 1, j - k)
                    if bk and bj:
                        acc += bi * bk * bj * x ** (k - t)
            if i == j:
                acc -= 1
            row.append(acc)
        rows.append(row)
    return ExactMatrix.of(rows)


def zn_factor_pair(n: int, x: Number, mu: Number) -> tuple[Fraction, Fraction]:
    """(det Z_n, the signed product of the two half-size determinants);
    the right component is 0 for odd n."""
    x, mu = frac(x), frac(mu)
    lhs = frac(det_fraction_free(build_Zn(n, x, mu)))
    if n % 2 == 1:
        return lhs, Fraction(0)
    half = n // 2
    first_rows = []
    second_rows = []
    for i in range(half):
        row1 = []
        row2 = []
        for j in range(half):
            acc1 = Fraction(0)
            acc2 = Fraction(0)
            for t in range(n):
                b1 = binomial(i + mu, t - i)
                if b1:
                    b2 = binomial(j + 1, t - j)
                    if b2:
                        acc1 += Fraction(t + 1, j + 1) * b1 * b2 * x ** (2 * j + 1 - t)
                b3 = binomial(i + mu + 1, t - i)
                if b3:
                    b4 = binomial(j, t - j)
                    if b4:
                        acc2 += (t + mu + 1) / (i + mu + 1) * b3 * b4 * x ** (2 * j - t)
            row1.append(acc1)
            row2.append(acc2)
        first_rows.append(row1)
        second_rows.append(row2)
    d1 = frac(det_fraction_free(ExactMatrix.of(first_rows)))
    d2 = frac(det_fraction_free(ExactMatrix.of(second_rows)))
    rhs = (-1) ** half * d1 * d2
    return lhs, rhs


def build_VW(n: int, m: Number) -> tuple[ExactMatrix, ExactMatrix]:
    """The two n x n matrices indexed by (2i+r, 2j+s), r, s in {0, 1}:
    V = (-1)^(r+s) binom(i+j+r+s+m/2, s+2j-i),  W = binom(i+j+m/2, s+2j-i-r)."""
    half_m = frac(m) / 2
    v_rows = []
    w_rows = []
    for row in range(n):
        i, r = divmod(row, 2)
        v_row = []
        w_row = []
        for col in range(n):
            j, s = divmod(col, 2)
            v_row.append((-1) ** (r + s) * binomial(i + j + r + s + half_m, s + 2 * j - i))
            w_row.append(binomial(i + j + half_m, s + 2 * j - i - r))
        v_rows.append(v_row)
        w_rows.append(w_row)
    return ExactMatrix.of(v_rows), ExactMatrix.of(w_rows)


def _reciprocal_factorial(k: int) -> Fraction:
    """1/k!, with the convention 1/k! = 0 for negative integers."""
    return Fraction(0) if k < 0 else Fraction(1, factorial(k))


def th10_pair(n: int, x: int, y: int) -> tuple[Fraction, Fraction]:
    """Determinant of ((x+y+i+j-1)! / ((x+2i-j)! (y+2j-i)!)) against its
    product evaluation, both exact."""
    if x < 0 or y < 0:
        raise ValueError("x and y must be nonnegative integers")
    if n > 0 and x + y == 0:
        raise ValueError("x + y must be positive for a nonempty matrix")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            num = factorial(x + y + i + j - 1)
            row.append(
                num * _reciprocal_factorial(x + 2 * i - j) * _reciprocal_factorial(y + 2 * j - i)
            )
        rows.append(row)
    lhs = frac(det_fraction_free(ExactMatrix.of(rows))) if n else Fraction(1)
    rhs = Fraction(1)
    for i in range(n):
        rhs *= Fraction(factorial(i) * factorial(x + y + i - 1))
        rhs *= frac(pochhammer(2 * x + y + 2 * i, i)) * frac(pochhammer(x + 2 * y + 2 * i, i))
        rhs /= factorial(x + 2 * i) * factorial(y + 2 * i)
    return lhs, rhs


def principal_minor_sum(matrix: ExactMatrix):
    """Sum of all principal minors (including the empty one); equals
    det(I + M)."""
    n = matrix.nrows
    total = _one_like(matrix.ring)
    for k in range(1, n + 1):
        for rows in combinations(range(n), k):
            total = total + det_fraction_free(matrix.submatrix(rows, rows))
    return total
