"""Exact constant matrices over the ring Z[sqrt(2), 1/2] + j*Z[sqrt(2), 1/2].

A matrix is stored as four integer component arrays (a, b, c, d) and a
denominator exponent f, with value (a + b*sqrt(2) + j*(c + d*sqrt(2))) /
sqrt(2)**f.  Since sqrt(2) is irrational, a value is zero iff all four
integer components are zero, so equality and identity tests are exact.

Products are computed through float64 BLAS matmuls of the integer
components.  Every intermediate of such a product is an integer bounded by
inner_dim * max|A| * max|B|; the bound is asserted to stay below 2**52, so
the float pipeline is exact integer arithmetic, just fast.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .dyadic import ComplexCoefficient, DyadicRootTwo

_EXACT_LIMIT = 1 << 52


def _exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    amax = float(np.abs(a).max(initial=0.0))
    bmax = float(np.abs(b).max(initial=0.0))
    if amax * bmax * a.shape[1] >= _EXACT_LIMIT:
        raise OverflowError("integer matmul would exceed exact float64 range")
    return np.rint(a @ b)


class RingMatrix:
    __slots__ = ("a", "b", "c", "d", "f")

    def __init__(self, a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray,
                 f: int = 0) -> None:
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self.f = f

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RingMatrix:
        z = lambda: np.zeros((rows, cols))
        return cls(z(), z(), z(), z(), 0)

    @classmethod
    def identity(cls, n: int) -> RingMatrix:
        m = cls.zeros(n, n)
        m.a = np.eye(n)
        return m

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> RingMatrix:
        """P with P[r, perm[r]] = 1, so (P @ M) row r equals M row perm[r]."""
        n = len(perm)
        m = cls.zeros(n, n)
        m.a[np.arange(n), list(perm)] = 1.0
        return m

    @classmethod
    def from_coefficients(cls, grid: Sequence[Sequence[ComplexCoefficient]]) -> RingMatrix:
        rows, cols = len(grid), len(grid[0])
        f = 0
        for row in grid:
            for cc in row:
                f = max(f, 2 * cc.re.e, 2 * cc.im.e)
        m = cls.zeros(rows, cols)
        m.f = f
        for i, row in enumerate(grid):
            for j, cc in enumerate(row):
                m.a[i, j], m.b[i, j] = cc.re.scaled_components(f)
                m.c[i, j], m.d[i, j] = cc.im.scaled_components(f)
        return m

    # -- shape / access ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape  # type: ignore[return-value]

    def entry(self, i: int, j: int) -> ComplexCoefficient:
        return ComplexCoefficient(
            self._part_value(int(self.a[i, j]), int(self.b[i, j])),
            self._part_value(int(self.c[i, j]), int(self.d[i, j])),
        )

    def _part_value(self, m: int, n: int) -> DyadicRootTwo:
        if self.f % 2 == 0:
            return DyadicRootTwo(m, n, self.f // 2)
        # (m + n r2) / r2**f = (2n + m r2) / 2**((f+1)/2) for odd f
        return DyadicRootTwo(2 * n, m, (self.f + 1) // 2)

    def nonzero_entries(self) -> Iterator[tuple[int, int, ComplexCoefficient]]:
        mask = (self.a != 0) | (self.b != 0) | (self.c != 0) | (self.d != 0)
        for i, j in zip(*np.nonzero(mask)):
            yield int(i), int(j), self.entry(int(i), int(j))

    def row_nonzeros(self, i: int) -> list[tuple[int, ComplexCoefficient]]:
        mask = (self.a[i] != 0) | (self.b[i] != 0) | (self.c[i] != 0) | (self.d[i] != 0)
        return [(int(j), self.entry(i, int(j))) for j in np.nonzero(mask)[0]]

    # -- exact algebra -------------------------------------------------------

    def rescaled(self, f_new: int) -> RingMatrix:
        """Same value with a larger denominator exponent."""
        delta = f_new - self.f
        if delta < 0:
            raise ValueError("cannot reduce denominator exponent")
        if delta == 0:
            return self
        if delta % 2 == 0:
            s = float(1 << (delta // 2))
            return RingMatrix(self.a * s, self.b * s, self.c * s, self.d * s, f_new)
        s = float(1 << ((delta - 1) // 2))
        # multiply components by sqrt(2): (a + b r2) r2 = 2b + a r2
        return RingMatrix(2 * self.b * s, self.a * s, 2 * self.d * s, self.c * s, f_new)

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        comps = {}
        for name_x, x in (("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d)):
            if not x.any():
                continue
            for name_y, y in (("a", other.a), ("b", other.b), ("c", other.c), ("d", other.d)):
                if not y.any():
                    continue
                comps[name_x + name_y] = _exact_matmul(x, y)

        zero = np.zeros((self.shape[0], other.shape[1]))
        g = lambda key: comps.get(key, zero)
        # (a + b r2 + j(c + d r2)) (p + q r2 + j(r + s r2))
        ra = g("aa") + 2 * g("bb") - g("cc") - 2 * g("dd")
        rb = g("ab") + g("ba") - g("cd") - g("dc")
        rc = g("ac") + g("ca") + 2 * g("bd") + 2 * g("db")
        rd = g("ad") + g("bc") + g("cb") + g("da")
        return RingMatrix(ra, rb, rc, rd, self.f + other.f)

    def conj_transpose(self) -> RingMatrix:
        return RingMatrix(self.a.T.copy(), self.b.T.copy(),
                          -self.c.T, -self.d.T, self.f)

    def kron(self, other: RingMatrix) -> RingMatrix:
        # Bilinear, so the components expand exactly like the scalar product.
        ra = np.kron(self.a, other.a) + 2 * np.kron(self.b, other.b) \
            - np.kron(self.c, other.c) - 2 * np.kron(self.d, other.d)
        rb = np.kron(self.a, other.b) + np.kron(self.b, other.a) \
            - np.kron(self.c, other.d) - np.kron(self.d, other.c)
        rc = np.kron(self.a, other.c) + np.kron(self.c, other.a) \
            + 2 * np.kron(self.b, other.d) + 2 * np.kron(self.d, other.b)
        rd = np.kron(self.a, other.d) + np.kron(self.d, other.a) \
            + np.kron(self.b, other.c) + np.kron(self.c, other.b)
        return RingMatrix(ra, rb, rc, rd, self.f + other.f)

    def __add__(self, other: RingMatrix) -> RingMatrix:
        f = max(self.f, other.f)
        x, y = self.rescaled(f), other.rescaled(f)
        return RingMatrix(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d, f)

    def __neg__(self) -> RingMatrix:
        return RingMatrix(-self.a, -self.b, -self.c, -self.d, self.f)

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        return self + (-other)

    def scaled(self, value: DyadicRootTwo) -> RingMatrix:
        # value = (m + n r2) / 2**e = (m + n r2) / r2**(2e)
        a = value.m * self.a + 2 * value.n * self.b
        b = value.m * self.b + value.n * self.a
        c = value.m * self.c + 2 * value.n * self.d
        d = value.m * self.d + value.n * self.c
        return RingMatrix(a, b, c, d, self.f + 2 * value.e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        f = max(self.f, other.f)
        x, y = self.rescaled(f), other.rescaled(f)
        return bool(
            np.array_equal(x.a, y.a) and np.array_equal(x.b, y.b)
            and np.array_equal(x.c, y.c) and np.array_equal(x.d, y.d)
        )

    __hash__ = None  # type: ignore[assignment]

    def is_identity(self) -> bool:
        n, m = self.shape
        return n == m and self == RingMatrix.identity(n)

    def is_zero(self) -> bool:
        return not (self.a.any() or self.b.any() or self.c.any() or self.d.any())

    def is_unitary(self) -> bool:
        return (self.conj_transpose() @ self).is_identity()

    def to_complex(self) -> np.ndarray:
        scale = np.sqrt(2.0) ** self.f
        return ((self.a + np.sqrt(2.0) * self.b)
                + 1j * (self.c + np.sqrt(2.0) * self.d)) / scale

    def __repr__(self) -> str:
        return f"RingMatrix(shape={self.shape}, f={self.f})"


def hstack(mats: Sequence[RingMatrix]) -> RingMatrix:
    f = max(m.f for m in mats)
    ms = [m.rescaled(f) for m in mats]
    return RingMatrix(
        np.hstack([m.a for m in ms]), np.hstack([m.b for m in ms]),
        np.hstack([m.c for m in ms]), np.hstack([m.d for m in ms]), f,
    )
