"""Independent test oracles.

These deliberately avoid the package's own verification paths: the
orthogonality oracle substitutes random numeric values into the defining
identity instead of using dispersion matrices, and the ML oracle decodes
by exhaustive search instead of per-coordinate slicing.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from nzcod.design import DesignMatrix
from nzcod.forms import Part, RealCoordinate
from nzcod.simulate import Constellation


def numeric_design(d: DesignMatrix, coords: dict[RealCoordinate, float]) -> np.ndarray:
    out = np.zeros((d.n, d.n), dtype=complex)
    for i, row in enumerate(d.entries):
        for j, form in enumerate(row):
            out[i, j] = form.evaluate(coords)
    return out


def orthogonality_oracle(d: DesignMatrix, draws: int = 200, seed: int = 0,
                         tol: float = 1e-9) -> bool:
    """G^H G == (sum of squared coordinates) * I under random rational
    substitution of all real coordinates."""
    rng = np.random.default_rng(seed)
    all_coords = [RealCoordinate(k, part)
                  for k in range(1, d.k + 1) for part in (Part.I, Part.Q)]
    for _ in range(draws):
        values = {c: float(Fraction(int(rng.integers(-12, 13)), int(rng.integers(1, 8))))
                  for c in all_coords}
        g = numeric_design(d, values)
        total = sum(v * v for v in values.values())
        if not np.allclose(g.conj().T @ g, total * np.eye(d.n), atol=tol):
            return False
    return True


class JointMLDecoder:
    """Exhaustive maximum-likelihood decoding over all symbol vectors."""

    def __init__(self, d: DesignMatrix, c: Constellation, beta: float) -> None:
        from nzcod.simulate import encode

        self.beta = beta
        self.combos = list(itertools.product(c.points, repeat=d.k))
        self.codewords = np.stack([encode(d, combo) for combo in self.combos])

    def decode(self, Y: np.ndarray, H: np.ndarray) -> list[complex]:
        metrics = np.sum(
            np.abs(Y[None] - self.beta * self.codewords @ H) ** 2, axis=(1, 2))
        return list(self.combos[int(np.argmin(metrics))])
