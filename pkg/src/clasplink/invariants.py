"""Linking invariants computed from clasp words and clasp incidence.

e_ij(w) is the signed count of occurrences of x_i appearing before x_j in
w.  Summed cyclically over the three clasp words of a 3-component complex
it yields the Milnor triple linking number; the pairwise linking number is
just the signed clasp count between two components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import CComplex, clasp_word
from .words import ClaspWord


def e_ij(w: ClaspWord, i: int, j: int) -> int:
    """Signed count of x_i-before-x_j pairs in w.

    Single left-to-right pass: maintain the running signed count of x_i
    letters and, at each x_j letter, add that count times the letter sign.
    """
    if i == j:
        raise ValueError("e_ij requires two distinct indices")
    running = 0
    total = 0
    for letter in w:
        if letter.index == i:
            running += letter.sign
        elif letter.index == j:
            total += running * letter.sign
    return total


def pairwise_linking(F: CComplex, i: int, j: int) -> int:
    """Signed count of the clasps joining components i and j."""
    if i == j:
        raise ValueError("pairwise linking requires two distinct components")
    for k in (i, j):
        if not 1 <= k <= F.n:
            raise ValueError(f"component {k} is not a component of this complex (n={F.n})")
    return sum(c.sign for c in F.clasps if {c.a, c.b} == {i, j})


@dataclass(frozen=True)
class TripleLinkingResult:
    """Value and breakdown of a triple linking number computation.

    ``contributions`` holds (e_ij(w_k), e_jk(w_i), e_ki(w_j)); the value is
    their sum.  ``well_defined`` is True iff the three pairwise linking
    numbers among the chosen components vanish, which is the hypothesis
    under which the value is an invariant of the link.
    """

    value: int
    contributions: tuple[int, int, int]
    well_defined: bool

    def __post_init__(self) -> None:
        if self.value != sum(self.contributions):
            raise ValueError("value must equal the sum of the contributions")


def triple_linking(F: CComplex, i: int, j: int, k: int) -> TripleLinkingResult:
    """Milnor triple linking number of components (i, j, k) of F.

    Computes e_ij(w_k) + e_jk(w_i) + e_ki(w_j) from the stored traversal
    orders.  The value is reported even when the pairwise linking numbers
    do not vanish; ``well_defined`` records whether they do.
    """
    if len({i, j, k}) != 3:
        raise ValueError("triple linking requires three distinct components")
    w_i, w_j, w_k = (clasp_word(F, c) for c in (i, j, k))
    contributions = (e_ij(w_k, i, j), e_ij(w_i, j, k), e_ij(w_j, k, i))
    well_defined = (
        pairwise_linking(F, i, j) == 0
        and pairwise_linking(F, j, k) == 0
        and pairwise_linking(F, k, i) == 0
    )
    return TripleLinkingResult(sum(contributions), contributions, well_defined)
