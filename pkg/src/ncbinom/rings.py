"""Exact coefficient arithmetic: rationals, prime fields, polynomials in q.

Rationals are stdlib ``fractions.Fraction``.  ``ModInt`` gives GF(p) with the
modulus carried on every element.  ``QPoly`` is a dense univariate polynomial
in the formal parameter q over the rationals; it hosts q-integers,
q-factorials and Gaussian binomials.  Everything is immutable and exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


class DivisionNotExact(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class ModInt:
    """An element of GF(p).  Mixing moduli is a construction error."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) with GF({other.p})")
            return other
        if isinstance(other, int):
            return ModInt(other, self.p)
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            inv = pow(other.denominator, -1, self.p)
            return ModInt(other.numerator * inv, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.value - o.value, self.p)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return ModInt(pow(self.value, n, self.p), self.p)

    def inverse(self) -> "ModInt":
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return ModInt(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.value == o.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModInt({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class QPoly:
    """Polynomial in q with Fraction coefficients, lowest degree first.

    The coefficient tuple never has a trailing zero, so degree is
    ``len(coeffs) - 1`` and the zero polynomial has an empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "QPoly":
        return QPoly((Fraction(c),))

    @staticmethod
    def zero() -> "QPoly":
        return QPoly(())

    @staticmethod
    def one() -> "QPoly":
        return QPoly((1,))

    @staticmethod
    def q(power: int = 1) -> "QPoly":
        return QPoly((0,) * power + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return QPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, value):
        """Evaluate at a numeric value of q (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def subs_q_power(self, k: int) -> "QPoly":
        """Substitute q -> q^k."""
        if not self.coeffs:
            return QPoly.zero()
        out = [Fraction(0)] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return QPoly(out)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def q_integer(n: int) -> QPoly:
    """(n)_q = 1 + q + ... + q^(n-1); (0)_q = 0."""
    if n < 0:
        raise ValueError("q-integer of negative n")
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q-factorial of negative n")
    if n == 0:
        return QPoly.one()
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial via the Pascal recursion; never divides.

    Total: k > n or k < 0 gives the zero polynomial.
    """
    if k < 0 or k > n:
        return QPoly.zero()
    if k == 0 or k == n:
        return QPoly.one()
    return q_binomial(n - 1, k - 1) + QPoly.q(k) * q_binomial(n - 1, k)


def qpoly_exact_div(a: QPoly, b: QPoly) -> QPoly:
    """Return c with a = b*c exactly, or raise DivisionNotExact."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return QPoly.zero()
    rem = list(a.coeffs)
    db = b.degree
    lead = b.coeffs[-1]
    if len(rem) - 1 < db:
        raise DivisionNotExact(f"deg {len(rem)-1} < deg {db}")
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        quot[i - db] = c
        if c != 0:
            for j, bc in enumerate(b.coeffs):
                rem[i - db + j] -= c * bc
    if any(c != 0 for c in rem):
        raise DivisionNotExact(f"nonzero remainder dividing {a} by {b}")
    return QPoly(quot)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> QPoly:
    """n-th cyclotomic polynomial, by exact division of q^n - 1."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = QPoly((-1,) + (0,) * (n - 1) + (1,))  # q^n - 1
    den = QPoly.one()
    for d in range(1, n):
        if n % d == 0:
            den = den * cyclotomic(d)
    return qpoly_exact_div(num, den)


def factorial(n: int) -> int:
    return math.factorial(n)
