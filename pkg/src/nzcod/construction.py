"""Construction of maximal-rate square orthogonal designs with no zeros.

The pipeline for 2**a antennas:

1. ``scod_design(a)``: the classic recursive square COD G in a+1 variables.
   Every row has a+1 nonzero entries; the rest are zeros.
2. ``post_mixer(a)``: an orthogonal block-diagonal mask W of +-1/sqrt(2)
   half-blocks.  ``mixed_design(a) = W G W`` has exactly 2**b nonzero
   entries per row, where b = floor(log2(a)) + 1.
3. A partition of the row indices Z_{2**a} into 2**b classes (XOR-cosets of
   a subspace spanned by ``interleaver_tables``' output) such that rows in
   one class have pairwise disjoint supports.
4. ``nzcod_design(a)``: within each class, mix the gathered rows by a
   Sylvester-Hadamard matrix and rescale.  Disjoint supports make every
   entry of the result nonzero, and unitarity of the mixing keeps the
   design orthogonal.

``pre_mixer(a)`` materializes the left factor U so that U G W equals the
no-zero design entry for entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .design import DesignMatrix, mul_const_design, mul_design_const
from .dyadic import ComplexCoefficient, DyadicRootTwo
from .forms import EntryForm
from .ringmat import RingMatrix


class ConstructionError(Exception):
    """An internal invariant of the construction failed."""


# ---------------------------------------------------------------------------
# Parameters and index combinatorics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionParams:
    a: int
    b: int  # floor(log2(a)) + 1
    m: int  # 2**b - a - 1, number of odd-weight half-blocks in the mask
    q: int  # a - 2**(b-1)


def construction_params(a: int) -> ConstructionParams:
    if a < 1:
        raise ValueError("antenna exponent a must be >= 1")
    b = a.bit_length()
    return ConstructionParams(a=a, b=b, m=2**b - a - 1, q=a - 2 ** (b - 1))


@dataclass(frozen=True)
class IndexSets:
    P: frozenset[int]
    Q: frozenset[int]
    T: frozenset[int]


def index_sets(p: ConstructionParams) -> IndexSets:
    P = frozenset([0] + [1 << j for j in range(p.a)])
    Q = frozenset(1 ^ (1 << j) for j in range(p.a - p.m, p.a))
    return IndexSets(P=P, Q=Q, T=P | Q)


def translate_set(T: frozenset[int], i: int) -> frozenset[int]:
    return frozenset(i ^ t for t in T)


def hamming_weight(x: int) -> int:
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# The recursive zero-heavy design
# ---------------------------------------------------------------------------


def scod_design(a: int) -> DesignMatrix:
    """Square COD of order 2**a in a+1 variables (fraction of zeros
    1 - (a+1)/2**a), built by the order-doubling recursion."""
    if a < 1:
        raise ValueError("a must be >= 1")
    grid: list[list[EntryForm]] = [
        [EntryForm.variable(1), -EntryForm.variable(2, conj=True)],
        [EntryForm.variable(2), EntryForm.variable(1, conj=True)],
    ]
    for step in range(2, a + 1):
        var = step + 1
        n = len(grid)
        zero = EntryForm.zero()
        new = [[zero] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                new[i][j] = grid[i][j]
                new[n + i][n + j] = grid[j][i].conj()
        neg_conj = -EntryForm.variable(var, conj=True)
        plain = EntryForm.variable(var)
        for i in range(n):
            new[i][n + i] = neg_conj
            new[n + i][i] = plain
        grid = new
    return DesignMatrix(2**a, a + 1, grid)


# ---------------------------------------------------------------------------
# The post-multiplying mask
# ---------------------------------------------------------------------------


def post_mixer(a: int) -> RingMatrix:
    """Block-diagonal orthogonal mask W of order 2**a.

    There are 2**m blocks of size 2**(a-m).  Even-weight block indices get
    an identity block; odd-weight indices get I (x) (1/sqrt(2)) [[1,1],[1,-1]].
    The 2x2 core follows the Sylvester sign convention, matching the
    published 32-antenna example of the mask.
    """
    p = construction_params(a)
    n = 2**a
    block = 2 ** (a - p.m)
    # Components over denominator sqrt(2): identity entries are sqrt(2)/sqrt(2),
    # mixed entries +-1/sqrt(2).
    ca = np.zeros((n, n))
    cb = np.zeros((n, n))
    for i in range(2**p.m):
        base = i * block
        if hamming_weight(i) % 2 == 0:
            for t in range(block):
                cb[base + t, base + t] = 1.0
        else:
            for t in range(0, block, 2):
                r = base + t
                ca[r, r] = 1.0
                ca[r, r + 1] = 1.0
                ca[r + 1, r] = 1.0
                ca[r + 1, r + 1] = -1.0
    return RingMatrix(ca, cb, np.zeros((n, n)), np.zeros((n, n)), f=1)


def mixed_design(a: int) -> DesignMatrix:
    """W G W: same variables, but every row support has size 2**b."""
    g = scod_design(a)
    w = post_mixer(a)
    return mul_const_design(w, mul_design_const(g, w))


# ---------------------------------------------------------------------------
# Interleaver tables over F2
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InterleaverTables:
    M: tuple[int, ...]
    M_tilde: tuple[int, ...]
    H: frozenset[int]
    J: frozenset[int]
    g: dict[int, int]
    f_prime: dict[int, int]
    f: dict[int, int]
    h: dict[int, int]
    M_prime: tuple[int, ...]


def _gf2_rank(vectors: list[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def interleaver_tables(p: ConstructionParams) -> InterleaverTables:
    """The doubling map g, the rebalancing bijection f, and the bit-spreading
    injection h whose image spans the coset subspace."""
    a, b, m = p.a, p.b, p.m
    M = tuple(x for x in range(2, a + 1) if x & (x - 1))

    def g(x: int) -> int:
        return 2 * x if not (x >> (b - 1)) & 1 else 2 * x + 1 - 2**b

    g_map = {x: g(x) for x in M}
    M_tilde = tuple(sorted(g_map.values()))
    J = frozenset(M) - frozenset(M_tilde)
    H = frozenset(M_tilde) - frozenset(M)

    shift = 2 * math.ceil(m / 2)
    # elements of M_tilde that are also in M map to themselves
    f_prime = {y: (y if y not in H else y + 1 - shift) for y in M_tilde}
    f_map = {x: f_prime[g_map[x]] for x in M}

    def h(x: int) -> int:
        v = 1 << (f_map[x] - 1)
        for j in range(b - 1):
            if (x >> j) & 1:
                v += 1 << (2 ** (j + 1) - 1)
        return v + ((x >> (b - 1)) & 1)

    h_map = {x: h(x) for x in M}
    M_prime = tuple(h_map[x] for x in M)

    if len(M) != a - b:
        raise ConstructionError(f"expected |M| == a - b for a={a}")
    if sorted(f_map.values()) != sorted(M):
        raise ConstructionError(f"f is not a bijection on M for a={a}")
    if any(f_map[x] > g_map[x] for x in M):
        raise ConstructionError(f"f(x) <= g(x) violated for a={a}")
    if _gf2_rank(list(M_prime)) != len(M_prime):
        raise ConstructionError(f"spanning set not independent for a={a}")
    return InterleaverTables(M=M, M_tilde=M_tilde, H=H, J=J, g=g_map,
                             f_prime=f_prime, f=f_map, h=h_map, M_prime=M_prime)


# ---------------------------------------------------------------------------
# Coset partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CosetPartition:
    a: int
    b: int
    basis: tuple[int, ...]
    subspace: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]


def coset_partition(a: int) -> CosetPartition:
    """Partition Z_{2**a} into 2**b XOR-cosets with pairwise-disjoint
    translated supports inside each coset.

    Cosets are ordered by their minimum element and sorted ascending
    internally; any order is valid, a fixed one keeps outputs stable.
    """
    p = construction_params(a)
    tables = interleaver_tables(p)
    subspace = {0}
    for v in tables.M_prime:
        subspace |= {s ^ v for s in subspace}
    if len(subspace) != 1 << (a - p.b):
        raise ConstructionError("subspace dimension mismatch")

    seen: dict[int, list[int]] = {}
    for x in range(1 << a):
        rep = min(x ^ s for s in subspace)
        seen.setdefault(rep, []).append(x)
    cosets = tuple(tuple(sorted(seen[rep])) for rep in sorted(seen))
    if len(cosets) != 1 << p.b:
        raise ConstructionError("wrong number of cosets")

    T = index_sets(p).T
    for coset in cosets:
        union: set[int] = set()
        for x in coset:
            tx = translate_set(T, x)
            if union & tx:
                raise ConstructionError(
                    f"translated supports intersect inside coset {coset}")
            union |= tx
    return CosetPartition(a=a, b=p.b, basis=tables.M_prime,
                          subspace=tuple(sorted(subspace)), cosets=cosets)


# ---------------------------------------------------------------------------
# Hadamard mixing and the no-zero design
# ---------------------------------------------------------------------------


def sylvester_hadamard(order: int) -> RingMatrix:
    if order < 1 or order & (order - 1):
        raise ValueError("order must be a power of 2")
    h = np.array([[1.0]])
    while h.shape[0] < order:
        h = np.block([[h, h], [h, -h]])
    n = order
    return RingMatrix(h, np.zeros((n, n)), np.zeros((n, n)), np.zeros((n, n)), 0)


def nzcod_design(a: int) -> DesignMatrix:
    """Maximal-rate square design of order 2**a with no zero entries."""
    p = construction_params(a)
    k_design = mixed_design(a)
    part = coset_partition(a)
    block = 1 << (a - p.b)
    hadamard = sylvester_hadamard(block).a  # +-1 floats
    scale = DyadicRootTwo.sqrt2_power(-(a - p.b))
    plus = ComplexCoefficient.real(scale)
    minus = ComplexCoefficient.real(-scale)

    row_forms = [
        [(j, form) for j, form in enumerate(row) if not form.is_zero]
        for row in k_design.entries
    ]
    n = k_design.n
    out: list[list[EntryForm]] = []
    for coset in part.cosets:
        for r in range(block):
            acc = [EntryForm.zero()] * n
            for t, src in enumerate(coset):
                coeff = plus if hadamard[r, t] > 0 else minus
                for j, form in row_forms[src]:
                    acc[j] = acc[j] + form.scaled(coeff)
            out.append(acc)
    return DesignMatrix(n, k_design.k, out)


def pre_mixer(a: int) -> RingMatrix:
    """Left factor U with U @ G @ W == nzcod_design(a), entry for entry."""
    p = construction_params(a)
    part = coset_partition(a)
    block = 1 << (a - p.b)
    hadamard = sylvester_hadamard(block)
    h_tilde = RingMatrix.identity(1 << p.b).kron(hadamard)
    perm = [x for coset in part.cosets for x in coset]
    gather = RingMatrix.permutation(perm)
    scale = DyadicRootTwo.sqrt2_power(-(a - p.b))
    return ((h_tilde @ gather) @ post_mixer(a)).scaled(scale)
