"""Square complex orthogonal designs with no zero entries.

Exact construction of maximal-rate square orthogonal designs for 2**a
transmit antennas whose entries are all nonzero, verification of the
combinatorial facts the construction rests on, a parser and corpus of
reference designs, and a Monte Carlo symbol-error-rate simulator.
"""

__version__ = "0.1.0"

from .construction import (
    construction_params,
    coset_partition,
    index_sets,
    interleaver_tables,
    mixed_design,
    nzcod_design,
    post_mixer,
    pre_mixer,
    scod_design,
    sylvester_hadamard,
    translate_set,
)
from .design import (
    DesignMatrix,
    DispersionSet,
    classify_design,
    extract_dispersion,
    interleave_identity_check,
    mul_const_design,
    mul_design_const,
    reconstruct,
    verify_orthogonality,
)
from .dyadic import ComplexCoefficient, DyadicRootTwo
from .forms import EntryForm, Part, RealCoordinate, classify_entry
from .notation import format_grid, parse_design, print_design
from .ringmat import RingMatrix

__all__ = [
    "__version__",
    "ComplexCoefficient",
    "DesignMatrix",
    "DispersionSet",
    "DyadicRootTwo",
    "EntryForm",
    "Part",
    "RealCoordinate",
    "RingMatrix",
    "classify_design",
    "classify_entry",
    "construction_params",
    "coset_partition",
    "extract_dispersion",
    "format_grid",
    "index_sets",
    "interleave_identity_check",
    "interleaver_tables",
    "mixed_design",
    "mul_const_design",
    "mul_design_const",
    "nzcod_design",
    "parse_design",
    "post_mixer",
    "pre_mixer",
    "print_design",
    "reconstruct",
    "scod_design",
    "sylvester_hadamard",
    "translate_set",
    "verify_orthogonality",
]
