"""Exact arithmetic in the ring Z[sqrt(2), 1/2].

Every scale factor that shows up when building no-zero-entry orthogonal
designs is of the form (m + n*sqrt(2)) / 2**e with integer m, n.  Keeping
these values exact (arbitrary-precision integers, no floats) makes every
equality test in the construction and verification pipeline decidable:
(m + n*sqrt(2)) / 2**e is zero iff m == n == 0, because sqrt(2) is
irrational.
"""

from __future__ import annotations

import math
from typing import Optional

_SQRT2 = math.sqrt(2.0)


class DyadicRootTwo:
    """A real number (m + n*sqrt(2)) / 2**e, kept in canonical form.

    Canonical form: e == 0, or not both m and n are even.  Two canonical
    triples are equal iff their fields are equal.
    """

    __slots__ = ("m", "n", "e")

    def __init__(self, m: int, n: int = 0, e: int = 0) -> None:
        if e < 0:
            m, n, e = m * (1 << -e), n * (1 << -e), 0
        while e > 0 and m % 2 == 0 and n % 2 == 0:
            m //= 2
            n //= 2
            e -= 1
        if m == 0 and n == 0:
            e = 0
        self.m = m
        self.n = n
        self.e = e

    @classmethod
    def zero(cls) -> DyadicRootTwo:
        return cls(0)

    @classmethod
    def one(cls) -> DyadicRootTwo:
        return cls(1)

    @classmethod
    def sqrt2_power(cls, p: int) -> DyadicRootTwo:
        """sqrt(2)**p for any integer p (negative p gives 1/sqrt(2)**|p|)."""
        if p >= 0:
            return cls(1 << (p // 2), 0, 0) if p % 2 == 0 else cls(0, 1 << (p // 2), 0)
        q = -p
        # 1/sqrt(2)**q: even q -> 1/2**(q/2); odd q -> sqrt(2)/2**((q+1)/2)
        return cls(1, 0, q // 2) if q % 2 == 0 else cls(0, 1, (q + 1) // 2)

    @property
    def is_zero(self) -> bool:
        return self.m == 0 and self.n == 0

    def __add__(self, other: DyadicRootTwo) -> DyadicRootTwo:
        if self.e == other.e:
            return DyadicRootTwo(self.m + other.m, self.n + other.n, self.e)
        if self.e < other.e:
            s = 1 << (other.e - self.e)
            return DyadicRootTwo(self.m * s + other.m, self.n * s + other.n, other.e)
        s = 1 << (self.e - other.e)
        return DyadicRootTwo(self.m + other.m * s, self.n + other.n * s, self.e)

    def __sub__(self, other: DyadicRootTwo) -> DyadicRootTwo:
        return self + (-other)

    def __neg__(self) -> DyadicRootTwo:
        return DyadicRootTwo(-self.m, -self.n, self.e)

    def __mul__(self, other: DyadicRootTwo) -> DyadicRootTwo:
        # (m1 + n1 r)(m2 + n2 r) = m1 m2 + 2 n1 n2 + (m1 n2 + n1 m2) r
        return DyadicRootTwo(
            self.m * other.m + 2 * self.n * other.n,
            self.m * other.n + self.n * other.m,
            self.e + other.e,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyadicRootTwo):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.e == other.e

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.e))

    def __bool__(self) -> bool:
        return not self.is_zero

    def to_float(self) -> float:
        return (self.m + self.n * _SQRT2) / (1 << self.e)

    def as_signed_sqrt2_power(self) -> Optional[tuple[int, int]]:
        """If the value equals sign * sqrt(2)**q, return (sign, q), else None.

        These are the only values the design grammar can print as scale
        prefixes, and the only ones with an inverse we ever need.
        """
        if self.n == 0 and self.m != 0:
            a = abs(self.m)
            if a & (a - 1) == 0:
                return (1 if self.m > 0 else -1, 2 * (a.bit_length() - 1) - 2 * self.e)
        if self.m == 0 and self.n != 0:
            a = abs(self.n)
            if a & (a - 1) == 0:
                return (1 if self.n > 0 else -1, 2 * (a.bit_length() - 1) + 1 - 2 * self.e)
        return None

    def inverse_scale(self) -> DyadicRootTwo:
        """Inverse of a +-sqrt(2)**q value.  General division is unsupported."""
        sp = self.as_signed_sqrt2_power()
        if sp is None:
            raise ValueError(f"no exact inverse for {self!r}")
        sign, q = sp
        inv = DyadicRootTwo.sqrt2_power(-q)
        return inv if sign > 0 else -inv

    def scaled_components(self, f: int) -> tuple[int, int]:
        """Integers (m', n') with self * sqrt(2)**f == m' + n'*sqrt(2).

        Requires f >= 2*e so the result is integral; used to put a whole
        matrix of coefficients over one common sqrt(2)-power denominator.
        """
        d = f - 2 * self.e
        if d < 0:
            raise ValueError("common denominator exponent too small")
        if d % 2 == 0:
            s = 1 << (d // 2)
            return self.m * s, self.n * s
        s = 1 << ((d - 1) // 2)
        # (m + n r) * r = 2n + m r
        return 2 * self.n * s, self.m * s

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self == DyadicRootTwo(1):
            return "1"
        if self == DyadicRootTwo(-1):
            return "-1"
        if self == DyadicRootTwo(0, 1, 1):
            return "s"
        if self.n == 0:
            return f"{self.m}/2^{self.e}" if self.e else f"{self.m}"
        if self.m == 0:
            core = f"{self.n}r2"
            return f"{core}/2^{self.e}" if self.e else core
        sign = "+" if self.n > 0 else "-"
        core = f"({self.m}{sign}{abs(self.n)}r2)"
        return f"{core}/2^{self.e}" if self.e else core

    def __repr__(self) -> str:
        return f"DyadicRootTwo({self.m}, {self.n}, {self.e})"


DRT_ZERO = DyadicRootTwo(0)
DRT_ONE = DyadicRootTwo(1)
DRT_HALF = DyadicRootTwo(1, 0, 1)
DRT_INV_SQRT2 = DyadicRootTwo(0, 1, 1)


class ComplexCoefficient:
    """Complex number with real and imaginary parts in Z[sqrt(2), 1/2]."""

    __slots__ = ("re", "im")

    def __init__(self, re: DyadicRootTwo, im: DyadicRootTwo = DRT_ZERO) -> None:
        self.re = re
        self.im = im

    @classmethod
    def from_ints(cls, re: int, im: int = 0) -> ComplexCoefficient:
        return cls(DyadicRootTwo(re), DyadicRootTwo(im))

    @classmethod
    def real(cls, value: DyadicRootTwo) -> ComplexCoefficient:
        return cls(value, DRT_ZERO)

    @property
    def is_zero(self) -> bool:
        return self.re.is_zero and self.im.is_zero

    @property
    def is_real(self) -> bool:
        return self.im.is_zero

    def __add__(self, other: ComplexCoefficient) -> ComplexCoefficient:
        return ComplexCoefficient(self.re + other.re, self.im + other.im)

    def __sub__(self, other: ComplexCoefficient) -> ComplexCoefficient:
        return ComplexCoefficient(self.re - other.re, self.im - other.im)

    def __neg__(self) -> ComplexCoefficient:
        return ComplexCoefficient(-self.re, -self.im)

    def __mul__(self, other: ComplexCoefficient) -> ComplexCoefficient:
        return ComplexCoefficient(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> ComplexCoefficient:
        return ComplexCoefficient(self.re, -self.im)

    def mul_j(self) -> ComplexCoefficient:
        return ComplexCoefficient(-self.im, self.re)

    def magnitude_squared(self) -> DyadicRootTwo:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexCoefficient):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero

    def to_complex(self) -> complex:
        return complex(self.re.to_float(), self.im.to_float())

    def __str__(self) -> str:
        if self.im.is_zero:
            return str(self.re)
        if self.re.is_zero:
            return f"{self.im}j"
        return f"({self.re}+{self.im}j)"

    def __repr__(self) -> str:
        return f"ComplexCoefficient({self.re!r}, {self.im!r})"


CC_ZERO = ComplexCoefficient(DRT_ZERO)
CC_ONE = ComplexCoefficient(DRT_ONE)
CC_J = ComplexCoefficient(DRT_ZERO, DRT_ONE)
CC_MINUS_ONE = ComplexCoefficient(DyadicRootTwo(-1))
