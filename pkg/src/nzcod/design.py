"""Symbolic design matrices and their exact verification.

A DesignMatrix is an n-by-n grid of EntryForm objects in k complex
variables.  Orthogonality (G^H G == sum |x_k|^2 * I) is checked through the
linear-dispersion decomposition: with C ranging over the 2k coefficient
matrices of the real coordinates, the identity holds iff C^H C == I for
every C and C^H D + D^H C == 0 for every pair.  That reformulation needs
O(k^2) constant matrix products instead of a quartic symbolic expansion,
and every product here is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .dyadic import ComplexCoefficient, DyadicRootTwo
from .forms import (
    EntryForm,
    Part,
    RealCoordinate,
    ScaledInterleaved,
    ScaledVariable,
    Zero,
    classify_entry,
)
from .ringmat import RingMatrix


class DesignMatrix:
    """Square matrix of entry forms in variables x_1 .. x_k."""

    __slots__ = ("n", "k", "entries")

    def __init__(self, n: int, k: int, entries: Sequence[Sequence[EntryForm]]) -> None:
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError("entries must form an n x n grid")
        for row in entries:
            for form in row:
                if form.max_var() > k:
                    raise ValueError("entry references a variable beyond k")
        self.n = n
        self.k = k
        self.entries = tuple(tuple(row) for row in entries)

    @classmethod
    def zeros(cls, n: int, k: int) -> DesignMatrix:
        z = EntryForm.zero()
        return cls(n, k, [[z] * n for _ in range(n)])

    def entry(self, i: int, j: int) -> EntryForm:
        return self.entries[i][j]

    def conj_transpose(self) -> DesignMatrix:
        grid = [[self.entries[j][i].conj() for j in range(self.n)] for i in range(self.n)]
        return DesignMatrix(self.n, self.k, grid)

    def zero_count(self) -> int:
        return sum(1 for row in self.entries for form in row if form.is_zero)

    def row_support(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(self.n) if not self.entries[i][j].is_zero)

    def with_entry(self, i: int, j: int, form: EntryForm) -> DesignMatrix:
        grid = [list(row) for row in self.entries]
        grid[i][j] = form
        return DesignMatrix(self.n, self.k, grid)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DesignMatrix):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"DesignMatrix(n={self.n}, k={self.k})"

    # -- JSON wire format ---------------------------------------------------

    def to_json_dict(self) -> dict:
        def term(coord: RealCoordinate, coeff: ComplexCoefficient) -> list:
            return [coord.var, coord.part.value,
                    [coeff.re.m, coeff.re.n, coeff.re.e],
                    [coeff.im.m, coeff.im.n, coeff.im.e]]

        return {
            "n": self.n,
            "k": self.k,
            "entries": [[[term(c, v) for c, v in form.sorted_terms()]
                         for form in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> DesignMatrix:
        def form(terms: list) -> EntryForm:
            out: dict[RealCoordinate, ComplexCoefficient] = {}
            for var, part, re, im in terms:
                coord = RealCoordinate(int(var), Part(part))
                out[coord] = ComplexCoefficient(DyadicRootTwo(*re), DyadicRootTwo(*im))
            return EntryForm(out)

        entries = [[form(cell) for cell in row] for row in data["entries"]]
        return cls(int(data["n"]), int(data["k"]), entries)

    @classmethod
    def from_json(cls, text: str) -> DesignMatrix:
        return cls.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# Linear-dispersion decomposition
# ---------------------------------------------------------------------------


@dataclass
class DispersionSet:
    """Constant matrices A_k (coefficients of x_kI) and B_k (of x_kQ)."""

    n: int
    k: int
    A: list[RingMatrix]
    B: list[RingMatrix]

    def coordinate_matrices(self) -> list[tuple[str, RingMatrix]]:
        out = []
        for i in range(self.k):
            out.append((f"A{i + 1}", self.A[i]))
            out.append((f"B{i + 1}", self.B[i]))
        return out

    def to_float_tensor(self) -> np.ndarray:
        """complex128 tensor of shape (2k, n, n); row 2i is x_{i+1}I, 2i+1 is x_{i+1}Q."""
        return np.stack([m.to_complex() for _, m in self.coordinate_matrices()])


def extract_dispersion(d: DesignMatrix) -> DispersionSet:
    f = 0
    for row in d.entries:
        for form in row:
            for coeff in form.terms.values():
                f = max(f, 2 * coeff.re.e, 2 * coeff.im.e)

    comps = np.zeros((2 * d.k, 4, d.n, d.n))
    for i, row in enumerate(d.entries):
        for j, form in enumerate(row):
            for coord, coeff in form.terms.items():
                u = 2 * (coord.var - 1) + (0 if coord.part is Part.I else 1)
                a, b = coeff.re.scaled_components(f)
                c, dd = coeff.im.scaled_components(f)
                comps[u, :, i, j] = (a, b, c, dd)

    A = [RingMatrix(*comps[2 * i], f=f) for i in range(d.k)]
    B = [RingMatrix(*comps[2 * i + 1], f=f) for i in range(d.k)]
    return DispersionSet(d.n, d.k, A, B)


def reconstruct(ds: DispersionSet) -> DesignMatrix:
    grids: list[list[dict[RealCoordinate, ComplexCoefficient]]] = [
        [dict() for _ in range(ds.n)] for _ in range(ds.n)
    ]
    for var in range(1, ds.k + 1):
        for part, mat in ((Part.I, ds.A[var - 1]), (Part.Q, ds.B[var - 1])):
            coord = RealCoordinate(var, part)
            for i, j, coeff in mat.nonzero_entries():
                grids[i][j][coord] = coeff
    entries = [[EntryForm(cell) for cell in row] for row in grids]
    return DesignMatrix(ds.n, ds.k, entries)


# ---------------------------------------------------------------------------
# Orthogonality
# ---------------------------------------------------------------------------


@dataclass
class OrthogonalityReport:
    ok: bool
    failed_condition: Optional[str] = None


def verify_orthogonality(d: DesignMatrix) -> OrthogonalityReport:
    """Exact check of G^H G == (sum_k |x_k|^2) I via dispersion matrices."""
    ds = extract_dispersion(d)
    mats = ds.coordinate_matrices()
    for name, mat in mats:
        if not (mat.conj_transpose() @ mat).is_identity():
            return OrthogonalityReport(False, f"{name}^H {name} != I")
    for u in range(len(mats)):
        name_u, cu = mats[u]
        cu_h = cu.conj_transpose()
        for v in range(u + 1, len(mats)):
            name_v, cv = mats[v]
            cross = cu_h @ cv
            if not (cross + cross.conj_transpose()).is_zero():
                return OrthogonalityReport(
                    False, f"{name_u}^H {name_v} + {name_v}^H {name_u} != 0")
    return OrthogonalityReport(True)


# ---------------------------------------------------------------------------
# Whole-design classification
# ---------------------------------------------------------------------------


@dataclass
class DesignClassification:
    zero_count: int
    is_cod: bool
    is_scaled_cod: bool
    is_cis_cod: bool
    interleaved_pairs: set[frozenset[int]]
    has_general_linear: bool
    orthogonal: bool
    failed_condition: Optional[str] = None
    column_scale_exponents: list[Optional[int]] = field(default_factory=list)
    scaled_appearance_counts_ok: Optional[bool] = None


def classify_design(d: DesignMatrix) -> DesignClassification:
    ortho = verify_orthogonality(d)
    zero_count = 0
    has_general = False
    all_scaled_vars = True
    pairs: set[frozenset[int]] = set()
    # per column: set of scale exponents p (coeff = +-sqrt(2)**(-p)) and
    # per-variable appearance counts, for the lambda-consistency report
    col_exponents: list[set[int]] = [set() for _ in range(d.n)]
    col_var_counts: list[dict[int, int]] = [dict() for _ in range(d.n)]

    for row in d.entries:
        for j, form in enumerate(row):
            cls = classify_entry(form)
            if isinstance(cls, Zero):
                zero_count += 1
            elif isinstance(cls, ScaledVariable):
                sp = cls.coeff.as_signed_sqrt2_power()
                assert sp is not None
                col_exponents[j].add(-sp[1])
                col_var_counts[j][cls.k] = col_var_counts[j].get(cls.k, 0) + 1
            elif isinstance(cls, ScaledInterleaved):
                all_scaled_vars = False
                pairs.add(frozenset((cls.i, cls.k)))
            else:
                all_scaled_vars = False
                has_general = True

    uniform_columns = all(len(exps) <= 1 for exps in col_exponents)
    is_cod = (ortho.ok and all_scaled_vars
              and all(exps <= {0} for exps in col_exponents))
    is_scaled_cod = ortho.ok and all_scaled_vars and uniform_columns
    is_cis_cod = ortho.ok and not has_general

    appearance_ok: Optional[bool] = None
    if is_scaled_cod:
        appearance_ok = True
        for j in range(d.n):
            exps = col_exponents[j]
            if not exps or max(exps) == 0:
                continue
            lam = 1 << max(exps)
            if any(count != lam for count in col_var_counts[j].values()):
                appearance_ok = False

    return DesignClassification(
        zero_count=zero_count,
        is_cod=is_cod,
        is_scaled_cod=is_scaled_cod,
        is_cis_cod=is_cis_cod,
        interleaved_pairs=pairs,
        has_general_linear=has_general,
        orthogonal=ortho.ok,
        failed_condition=ortho.failed_condition,
        column_scale_exponents=[max(exps) if exps else None for exps in col_exponents],
        scaled_appearance_counts_ok=appearance_ok,
    )


# ---------------------------------------------------------------------------
# Constant-matrix products
# ---------------------------------------------------------------------------


def mul_const_design(c: RingMatrix, d: DesignMatrix) -> DesignMatrix:
    rows, mid = c.shape
    if mid != d.n:
        raise ValueError("dimension mismatch")
    if rows != d.n:
        raise ValueError("products must stay square")
    out: list[list[EntryForm]] = [[EntryForm.zero()] * d.n for _ in range(d.n)]
    row_forms = [
        [(j, form) for j, form in enumerate(row) if not form.is_zero]
        for row in d.entries
    ]
    for i in range(rows):
        acc = [EntryForm.zero()] * d.n
        for t, coeff in c.row_nonzeros(i):
            for j, form in row_forms[t]:
                acc[j] = acc[j] + form.scaled(coeff)
        out[i] = acc
    return DesignMatrix(d.n, d.k, out)


def mul_design_const(d: DesignMatrix, c: RingMatrix) -> DesignMatrix:
    mid, cols = c.shape
    if mid != d.n:
        raise ValueError("dimension mismatch")
    if cols != d.n:
        raise ValueError("products must stay square")
    col_nonzeros: list[list[tuple[int, ComplexCoefficient]]] = [[] for _ in range(cols)]
    for t, j, coeff in c.nonzero_entries():
        col_nonzeros[j].append((t, coeff))
    out: list[list[EntryForm]] = []
    for i in range(d.n):
        row = d.entries[i]
        acc = []
        for j in range(cols):
            form = EntryForm.zero()
            for t, coeff in col_nonzeros[j]:
                if not row[t].is_zero:
                    form = form + row[t].scaled(coeff)
            acc.append(form)
        out.append(acc)
    return DesignMatrix(d.n, d.k, out)


# ---------------------------------------------------------------------------
# Coordinate-interleaving identities
# ---------------------------------------------------------------------------


def interleave_identity_check() -> bool:
    """Check the four rewrite identities that express interleaved variables
    as rational combinations of two variables and their conjugates."""
    half = ComplexCoefficient.real(DyadicRootTwo(1, 0, 1))
    s1 = EntryForm.variable(1)
    s1c = EntryForm.variable(1, conj=True)
    s2 = EntryForm.variable(2)
    s2c = EntryForm.variable(2, conj=True)

    cases = [
        # (-s1 - s1* + s2 - s2*)/2 == -conj(s_{1,2})
        ((-s1 - s1c + s2 - s2c).scaled(half),
         -EntryForm.interleaved(1, 2, conj=True)),
        # (s1 - s1* - s2 - s2*)/2 == -conj(s_{2,1})
        ((s1 - s1c - s2 - s2c).scaled(half),
         -EntryForm.interleaved(2, 1, conj=True)),
        # (s1 - s1* + s2 + s2*)/2 == s_{2,1}
        ((s1 - s1c + s2 + s2c).scaled(half),
         EntryForm.interleaved(2, 1)),
        # -(s1 + s1* + s2 - s2*)/2 == -s_{1,2}
        ((-(s1 + s1c + s2 - s2c)).scaled(half),
         -EntryForm.interleaved(1, 2)),
    ]
    return all(lhs == rhs for lhs, rhs in cases)
