"""clasplink: link invariants and clasp-number bounds from clasp data.

A C-complex for a link is a union of surfaces, one per component, that
intersect only in signed clasps.  This package works with the purely
combinatorial shadow of that picture: which clasps exist, their signs,
and the order each component meets them.  From those data it computes
clasp words, pairwise linking numbers, Milnor triple linking numbers,
lattice-curve areas, and exact lower and upper bounds on the minimal
number of clasps, all in exact integer arithmetic, with brute-force
oracles double-checking the closed forms at desk scale.
"""

from .bounds import (
    BoundReport,
    bound_report,
    ceil_two_sqrt,
    min_polyomino_perimeter,
    three_component_lower_bound,
    two_component_clasp_number,
)
from .complexes import (
    CComplex,
    Clasp,
    ComplexFormatError,
    clasp_word,
    generate_brn,
    parse_complex,
    print_complex,
    total_clasps,
    validate,
    with_rotated_order,
)
from .curves import LatticeCurve, build_curve
from .invariants import TripleLinkingResult, e_ij, pairwise_linking, triple_linking
from .oracles import (
    CapExceededError,
    OracleReport,
    Polyomino,
    count_fixed_polyominoes,
    enumerate_polyominoes,
    format_reports,
    verify_min_perimeter,
    verify_word_length_bound,
)
from .words import ClaspWord, SignedLetter, WordSyntaxError, parse_word

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CComplex",
    "CapExceededError",
    "Clasp",
    "ClaspWord",
    "ComplexFormatError",
    "LatticeCurve",
    "OracleReport",
    "Polyomino",
    "SignedLetter",
    "TripleLinkingResult",
    "WordSyntaxError",
    "bound_report",
    "build_curve",
    "ceil_two_sqrt",
    "clasp_word",
    "count_fixed_polyominoes",
    "e_ij",
    "enumerate_polyominoes",
    "format_reports",
    "generate_brn",
    "min_polyomino_perimeter",
    "pairwise_linking",
    "parse_complex",
    "parse_word",
    "print_complex",
    "three_component_lower_bound",
    "total_clasps",
    "triple_linking",
    "two_component_clasp_number",
    "validate",
    "verify_min_perimeter",
    "verify_word_length_bound",
    "with_rotated_order",
]
