"""Exact arithmetic in the cyclotomic field Q(zeta), zeta a primitive 24th root of unity.

An element is stored as an integer numerator vector of length 8 (coefficients
of 1, zeta, ..., zeta^7) over one positive common denominator.  The minimal
polynomial is Phi_24 = zeta^8 - zeta^4 + 1, so zeta^8 = zeta^4 - 1.

>>> I * I == -1
True
>>> OMEGA ** 3 == 1 and OMEGA != 1
True
>>> SQRT2 * SQRT2
Scalar(2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

DEGREE = 8


def _reduce_ints(c: list[int]) -> list[int]:
    """Reduce an integer coefficient list of any length modulo Phi_24."""
    c = list(c)
    for m in range(len(c) - 1, DEGREE - 1, -1):
        v = c[m]
        if v:
            # zeta^m = zeta^(m-4) - zeta^(m-8)
            c[m - 4] += v
            c[m - 8] -= v
            c[m] = 0
    c = c[:DEGREE]
    if len(c) < DEGREE:
        c += [0] * (DEGREE - len(c))
    return c


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("division by zero")
    if den < 0:
        num = [-v for v in num]
        den = -den
    g = den
    for v in num:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if not any(num):
        return (0,) * DEGREE, 1
    if g != 1:
        num = [v // g for v in num]
        den //= g
    return tuple(num), den


@dataclass(frozen=True, slots=True)
class Scalar:
    """Immutable element of Q(zeta_24) in canonical form."""

    num: tuple[int, ...]
    den: int = 1

    @staticmethod
    def of(value: Scalar | int | Fraction) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Scalar((value,) + (0,) * (DEGREE - 1), 1)
        if isinstance(value, Fraction):
            return Scalar(*_normalize((value.numerator,) + (0,) * (DEGREE - 1), value.denominator))
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    @staticmethod
    def from_ints(num: Sequence[int], den: int = 1) -> Scalar:
        return Scalar(*_normalize(_reduce_ints(list(num)), den))

    @staticmethod
    def from_coeffs(coeffs: Iterable[Fraction | int]) -> Scalar:
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return Scalar.from_ints([int(f * den) for f in fr], den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self) -> bool:
        return any(self.num)

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return Scalar(*_normalize([a + b for a, b in zip(self.num, o.num)], self.den))
        return Scalar(*_normalize([a * o.den + b * self.den for a, b in zip(self.num, o.num)],
                                  self.den * o.den))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.num, o.num
        if not any(a[1:]):
            k = a[0]
            return Scalar(*_normalize([k * v for v in b], self.den * o.den))
        if not any(b[1:]):
            k = b[0]
            return Scalar(*_normalize([k * v for v in a], self.den * o.den))
        c = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        c[i + j] += x * y
        return Scalar(*_normalize(_reduce_ints(c), self.den * o.den))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        return invert(self)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * invert(o)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * invert(self)

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return invert(self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def conj(self) -> Scalar:
        """Complex conjugation zeta -> zeta^-1 = zeta^23."""
        c = [0] * 24
        for k, v in enumerate(self.num):
            c[(24 - k) % 24] += v
        return Scalar.from_ints(c, self.den)

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / 24)
        return sum(v * z ** k for k, v in enumerate(self.num)) / self.den

    def serialize(self) -> list[str]:
        return serialize(self)

    def __repr__(self) -> str:
        if self.is_rational():
            f = Fraction(self.num[0], self.den)
            return f"Scalar({f})" if f.denominator == 1 else f"Scalar({f.numerator}/{f.denominator})"
        return f"Scalar({self})"

    def __str__(self) -> str:
        parts = []
        for k, v in enumerate(self.num):
            if not v:
                continue
            f = Fraction(v, self.den)
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            mag = mono if (k and abs(f) == 1) else str(abs(f)) + ("*" + mono if mono else "")
            parts.append(("-" if f < 0 else "+", mag))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{sg} {m}" for sg, m in parts[1:]])


def _coerce(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.of(value)
    return NotImplemented


def reduce(poly: Sequence[Fraction | int]) -> Scalar:
    """Canonical representative of a rational polynomial in zeta.

    >>> reduce([0] * 8 + [1]) == reduce([-1, 0, 0, 0, 1])
    True
    >>> reduce([0] * 24 + [1])
    Scalar(1)
    """
    fr = [Fraction(c) for c in poly] or [Fraction(0)]
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    return Scalar.from_ints([int(f * den) for f in fr], den)


def arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Dispatch one of add, sub, mul, neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


# Polynomial helpers over Q for the extended gcd, lists are low-degree first.

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        _trim(a)
    return _trim(q), a


def _pmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    c = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return _trim(c)


def _psub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


_PHI24 = [Fraction(c) for c in (1, 0, 0, 0, -1, 0, 0, 0, 1)]


def invert(a: Scalar) -> Scalar:
    """Multiplicative inverse by the extended Euclidean algorithm against Phi_24.

    >>> invert(I) == -I
    True
    >>> invert(1 + I) == (1 - I) / 2
    True
    """
    if a.is_zero():
        raise ZeroDivisionError("division by zero")
    if a.is_rational():
        return Scalar.of(Fraction(a.den, a.num[0]))
    # invariant: s * a == r  (mod Phi_24)
    r0, r1 = list(_PHI24), _trim([Fraction(v) for v in a.num])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    if not r1:
        raise ArithmeticError("element shares a factor with the minimal polynomial")
    c = r1[0]
    inv = reduce([x / c for x in s1]) * Scalar.of(Fraction(a.den))
    return inv


def constant(name: str, p: int | None = None, q: int | None = None) -> Scalar:
    """Named field constants: one, zero, i, omega, sqrt2, rational.

    >>> constant("i") ** 2
    Scalar(-1)
    >>> constant("rational", 3, 6)
    Scalar(1/2)
    """
    if name == "one":
        return ONE
    if name == "zero":
        return ZERO
    if name == "i":
        return I
    if name == "omega":
        return OMEGA
    if name == "sqrt2":
        return SQRT2
    if name == "rational":
        if p is None or q is None:
            raise ValueError("rational constant needs p and q")
        if q == 0:
            raise ZeroDivisionError("division by zero")
        return Scalar.of(Fraction(p, q))
    raise ValueError(f"unknown constant {name!r}")


def serialize(a: Scalar) -> list[str]:
    """Eight strings "p/q" (or "p" when integral), index k is the zeta^k coefficient."""
    return [str(c) for c in a.coeffs]


def deserialize(items: Sequence[str]) -> Scalar:
    if len(items) != DEGREE:
        raise ValueError(f"expected {DEGREE} coefficients, got {len(items)}")
    return Scalar.from_coeffs(Fraction(s) for s in items)


def zeta_power(k: int) -> Scalar:
    c = [0] * 24
    c[k % 24] = 1
    return Scalar.from_ints(c)


ZERO = Scalar.of(0)
ONE = Scalar.of(1)
ZETA = zeta_power(1)
I = zeta_power(6)
OMEGA = zeta_power(8)
SQRT2 = zeta_power(3) + zeta_power(21)
HALF = Scalar.of(Fraction(1, 2))
