"""Exact scalar and polynomial arithmetic used by every other module.

Rationals are `fractions.Fraction` throughout; no floating point appears
anywhere in the library.  Univariate integer polynomials get a small dense
representation of their own, which is all the FK and rank-generating-function
computations need (degrees stay below ~30 at desk scale).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError

__all__ = [
    "stirling2",
    "pochhammer",
    "chu_vandermonde_check",
    "IntPolynomial",
    "poly_divides",
    "lagrange_interpolate",
    "interpolate_integer_polynomial",
]


@lru_cache(maxsize=None)
def stirling2(L: int, j: int) -> int:
    """Number of set partitions of {1..L} into j blocks.

    Memoized on (L, j); out-of-range pairs return 0.

    >>> stirling2(4, 3)
    6
    """
    if L < 0 or j < 0:
        return 0
    if L == 0:
        return 1 if j == 0 else 0
    if j == 0 or j > L:
        return 0
    return j * stirling2(L - 1, j) + stirling2(L - 1, j - 1)


def pochhammer(z: Fraction | int, j: int) -> Fraction:
    """Rising factorial z(z+1)...(z+j-1); the empty product is 1."""
    if j < 0:
        raise DomainError("pochhammer needs j >= 0")
    out = Fraction(1)
    z = Fraction(z)
    for k in range(j):
        out *= z + k
    return out


def chu_vandermonde_check(m: int, B: Fraction | int, C: Fraction | int) -> bool:
    """Evaluate the terminating 2F1(-m, B; C; 1) sum and compare it with
    (C-B)_m / (C)_m.  Exact in rationals; returns True iff the two sides agree.

    Raises DomainError when some C+k (0 <= k < m) vanishes, which would put a
    zero into a Pochhammer denominator.
    """
    if m < 0:
        raise DomainError("chu_vandermonde_check needs m >= 0")
    B, C = Fraction(B), Fraction(C)
    for k in range(m):
        if C + k == 0:
            raise DomainError(f"C + {k} = 0 makes the sum undefined")
    total = Fraction(0)
    for k in range(m + 1):
        total += (
            pochhammer(Fraction(-m), k)
            * pochhammer(B, k)
            / (pochhammer(C, k) * factorial(k))
        )
    return total == pochhammer(C - B, m) / pochhammer(C, m)


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[k]`` is the coefficient of x^k; no trailing zeros are stored and
    the zero polynomial is the empty tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(tuple(int(c) for c in self.coeffs)))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def x_plus(c: int) -> "IntPolynomial":
        """The linear polynomial x + c."""
        return IntPolynomial((c, 1))

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial(tuple(-c for c in other.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{mag}{xs}"
            parts.append(sign + body)
        return "".join(parts)


def poly_divides(p: IntPolynomial, q: IntPolynomial):
    """Divide q by p over the rationals.

    Returns None when the division leaves a remainder.  When it is exact the
    quotient may still have rational coefficients, so the result is a pair
    (numerator polynomial, positive common denominator).

    Raises DomainError when p = 0.
    """
    if p.is_zero():
        raise DomainError("division by the zero polynomial")
    if q.is_zero():
        return IntPolynomial.zero(), 1
    if q.degree < p.degree:
        return None
    rem = [Fraction(c) for c in q.coeffs]
    quot = [Fraction(0)] * (q.degree - p.degree + 1)
    lead = Fraction(p.leading_coefficient())
    for k in range(q.degree - p.degree, -1, -1):
        c = rem[k + p.degree] / lead
        quot[k] = c
        if c:
            for i, pc in enumerate(p.coeffs):
                rem[k + i] -= c * pc
    if any(rem):
        return None
    den = 1
    for c in quot:
        den = den * c.denominator // _gcd(den, c.denominator)
    return IntPolynomial(tuple(int(c * den) for c in quot)), den


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def lagrange_interpolate(points) -> list[Fraction]:
    """Coefficients (low to high) of the unique polynomial of degree
    < len(points) through the given (x, y) pairs, as exact Fractions."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    n = len(pts)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(pts):
        # numerator polynomial prod_{j != i} (x - xj), built densely
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
        scale = yi / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    while len(coeffs) > 0 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def interpolate_integer_polynomial(points) -> IntPolynomial:
    """Interpolate and insist on integer coefficients."""
    coeffs = lagrange_interpolate(points)
    if any(c.denominator != 1 for c in coeffs):
        raise DomainError(f"interpolation produced non-integer coefficients {coeffs}")
    return IntPolynomial(tuple(int(c) for c in coeffs))
