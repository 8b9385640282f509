"""Entries of a design matrix as linear forms over real coordinates.

A complex variable x_k splits into two real coordinates x_kI and x_kQ
(x_k = x_kI + j*x_kQ).  Every matrix entry we handle is a complex-linear
combination of these real coordinates; a plain variable, its conjugate,
and the coordinate-interleaved combination x_iI + j*x_kQ are all special
cases of one canonical representation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .dyadic import CC_ONE, CC_ZERO, ComplexCoefficient, DyadicRootTwo


class Part(enum.Enum):
    I = "I"  # in-phase (real part of the variable)
    Q = "Q"  # quadrature (imaginary part)


@dataclass(frozen=True)
class RealCoordinate:
    var: int  # 1-based variable index
    part: Part

    def __post_init__(self) -> None:
        if self.var < 1:
            raise ValueError("variable indices are 1-based")


# Part is not orderable by default; sort keys go through this helper.
def _coord_key(c: RealCoordinate) -> tuple[int, int]:
    return (c.var, 0 if c.part is Part.I else 1)


class EntryForm:
    """Finite map RealCoordinate -> ComplexCoefficient; zero coeffs dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict[RealCoordinate, ComplexCoefficient]] = None):
        self.terms: dict[RealCoordinate, ComplexCoefficient] = {}
        if terms:
            for coord, coeff in terms.items():
                if not coeff.is_zero:
                    self.terms[coord] = coeff

    @classmethod
    def zero(cls) -> EntryForm:
        return cls()

    @classmethod
    def variable(cls, k: int, conj: bool = False,
                 coeff: ComplexCoefficient = CC_ONE) -> EntryForm:
        """coeff * x_k, or coeff * conj(x_k)."""
        jq = coeff.mul_j()
        return cls({
            RealCoordinate(k, Part.I): coeff,
            RealCoordinate(k, Part.Q): -jq if conj else jq,
        })

    @classmethod
    def interleaved(cls, i: int, k: int, conj: bool = False,
                    coeff: ComplexCoefficient = CC_ONE) -> EntryForm:
        """coeff * (x_iI + j*x_kQ), optionally conjugated."""
        jq = coeff.mul_j()
        return cls({
            RealCoordinate(i, Part.I): coeff,
            RealCoordinate(k, Part.Q): -jq if conj else jq,
        })

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, coord: RealCoordinate) -> ComplexCoefficient:
        return self.terms.get(coord, CC_ZERO)

    def __add__(self, other: EntryForm) -> EntryForm:
        out = dict(self.terms)
        for coord, coeff in other.terms.items():
            cur = out.get(coord)
            s = coeff if cur is None else cur + coeff
            if s.is_zero:
                out.pop(coord, None)
            else:
                out[coord] = s
        res = EntryForm.__new__(EntryForm)
        res.terms = out
        return res

    def __sub__(self, other: EntryForm) -> EntryForm:
        return self + (-other)

    def __neg__(self) -> EntryForm:
        res = EntryForm.__new__(EntryForm)
        res.terms = {c: -v for c, v in self.terms.items()}
        return res

    def scaled(self, coeff: ComplexCoefficient) -> EntryForm:
        if coeff.is_zero:
            return EntryForm.zero()
        res = EntryForm.__new__(EntryForm)
        res.terms = {c: coeff * v for c, v in self.terms.items()}
        return res

    def conj(self) -> EntryForm:
        # Real coordinates stay real under conjugation.
        res = EntryForm.__new__(EntryForm)
        res.terms = {c: v.conj() for c, v in self.terms.items()}
        return res

    def sorted_terms(self) -> list[tuple[RealCoordinate, ComplexCoefficient]]:
        return sorted(self.terms.items(), key=lambda t: _coord_key(t[0]))

    def max_var(self) -> int:
        return max((c.var for c in self.terms), default=0)

    def evaluate(self, coords: dict[RealCoordinate, float]) -> complex:
        return sum((v.to_complex() * coords[c] for c, v in self.terms.items()), 0j)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EntryForm):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.sorted_terms()))

    def __repr__(self) -> str:
        inner = ", ".join(f"x{c.var}{c.part.value}: {v}" for c, v in self.sorted_terms())
        return f"EntryForm({{{inner}}})"


# ---------------------------------------------------------------------------
# Entry classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class ScaledVariable:
    k: int
    conjugated: bool
    coeff: DyadicRootTwo  # +-sqrt(2)**(-p), sign included


@dataclass(frozen=True)
class ScaledInterleaved:
    i: int
    k: int
    conjugated: bool
    coeff: DyadicRootTwo


@dataclass(frozen=True)
class GeneralLinear:
    pass


EntryClass = Zero | ScaledVariable | ScaledInterleaved | GeneralLinear


def classify_entry(e: EntryForm) -> EntryClass:
    """Classify one entry per the admissible-entry taxonomy.

    ScaledVariable / ScaledInterleaved require a real +-sqrt(2)-power
    coefficient; anything else (several variables, rational mixes,
    j-scaled variables) is GeneralLinear.
    """
    if e.is_zero:
        return Zero()
    if len(e.terms) != 2:
        return GeneralLinear()
    by_part = {coord.part: (coord, coeff) for coord, coeff in e.terms.items()}
    if set(by_part) != {Part.I, Part.Q}:
        return GeneralLinear()
    (ci, vi), (cq, vq) = by_part[Part.I], by_part[Part.Q]
    # Candidate form: vi * x_iI + vq * x_kQ with vq = +-j*vi.
    if not vi.is_real or vi.re.as_signed_sqrt2_power() is None:
        return GeneralLinear()
    if vq == vi.mul_j():
        conjugated = False
    elif vq == -vi.mul_j():
        conjugated = True
    else:
        return GeneralLinear()
    coeff = vi.re
    if ci.var == cq.var:
        return ScaledVariable(ci.var, conjugated, coeff)
    return ScaledInterleaved(ci.var, cq.var, conjugated, coeff)

