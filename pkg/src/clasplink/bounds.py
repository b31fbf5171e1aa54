"""Exact-integer clasp number bounds.

C(L) is the minimum number of clasps over all C-complexes bounded by L,
B(L) the minimum number of crossing changes reducing L to a boundary
link; they satisfy sum |lk| <= B(L) <= C(L).  For 2-component links the
linking number determines C(L) outright; for 3-component links with
vanishing pairwise linking the triple linking number gives the lower
bound 2*ceil(2*sqrt(|mu|/3)).

Ceilings of square roots are computed through integer inequalities only
(floating point rounds the wrong way exactly at perfect squares).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .complexes import CComplex, total_clasps, validate
from .invariants import pairwise_linking, triple_linking


def _smallest_root_at_least(target: int, coeff: int) -> int:
    """Smallest m >= 0 with coeff * m^2 >= target (both integers, coeff >= 1)."""
    if target <= 0:
        return 0
    m = isqrt(target // coeff)
    while coeff * m * m < target:
        m += 1
    return m


def ceil_two_sqrt(a: int) -> int:
    """ceil(2*sqrt(a)) for a >= 0, exactly: min {m >= 0 : m^2 >= 4a}."""
    if a < 0:
        raise ValueError(f"argument must be nonnegative, got {a}")
    return _smallest_root_at_least(4 * a, 1)


def min_polyomino_perimeter(a: int) -> int:
    """Minimum perimeter of an area-a polyomino: 2*ceil(2*sqrt(a)).

    This is the Harary-Harborth minimum; the oracles module re-derives it
    by exhaustive enumeration.
    """
    if a < 1:
        raise ValueError(f"polyomino area must be at least 1, got {a}")
    return 2 * ceil_two_sqrt(a)


def two_component_clasp_number(lk: int) -> int | frozenset[int]:
    """Clasp number of a 2-component link from its linking number.

    Nonzero lk determines C(L) = |lk| exactly; lk = 0 leaves the
    dichotomy {0, 2} (boundary link or not), returned as a set.
    """
    return abs(lk) if lk != 0 else frozenset({0, 2})


def three_component_lower_bound(mu: int) -> int:
    """Lower bound 2*ceil(2*sqrt(|mu|/3)) on the clasp number of a
    3-component link with vanishing pairwise linking numbers, computed as
    2 * min {m >= 0 : 3m^2 >= 4|mu|}."""
    return 2 * _smallest_root_at_least(4 * abs(mu), 3)


@dataclass(frozen=True)
class BoundReport:
    """Bounds on C(L) and B(L) with a provenance tag per bound."""

    n: int
    lower_C: int
    upper_C: int
    lower_B: int
    upper_B: int
    exact_C: int | frozenset[int] | None = None
    provenance: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.lower_C > self.upper_C:
            raise ValueError(f"lower_C={self.lower_C} exceeds upper_C={self.upper_C}")
        if self.lower_B > self.upper_B:
            raise ValueError(f"lower_B={self.lower_B} exceeds upper_B={self.upper_B}")
        if self.upper_B > self.upper_C:
            raise ValueError(f"upper_B={self.upper_B} exceeds upper_C={self.upper_C}")

    def summary(self) -> str:
        if isinstance(self.exact_C, frozenset):
            values = ", ".join(str(v) for v in sorted(self.exact_C))
            head = f"C in {{{values}}}"
        elif self.exact_C is not None:
            head = f"C = {self.exact_C} (exact)"
        elif self.lower_C == self.upper_C:
            head = f"C = {self.lower_C} (exact)"
        else:
            head = f"{self.lower_C} <= C <= {self.upper_C}"
        if self.n == 2:
            plural = "clasp" if self.upper_C == 1 else "clasps"
            head += f"; this complex has {self.upper_C} {plural}"
        return head

    def format(self) -> str:
        """Text form: summary first, then one provenanced line per bound."""
        lines = [self.summary()]
        for key in ("lower_C", "upper_C", "exact_C", "lower_B", "upper_B"):
            value = getattr(self, key)
            if value is None:
                continue
            note = self.provenance.get(key, "")
            suffix = f" # {note}" if note else ""
            if isinstance(value, frozenset):
                values = ", ".join(str(v) for v in sorted(value))
                lines.append(f"{key} in {{{values}}}{suffix}")
            else:
                lines.append(f"{key} = {value}{suffix}")
        return "\n".join(lines) + "\n"


def bound_report(F: CComplex) -> BoundReport:
    """Assemble every bound the given 2- or 3-component complex certifies.

    The complex itself always supplies the upper bound (its clasp count);
    lower bounds come from the linking numbers, and for 3 components with
    vanishing pairwise linking from the triple linking number.
    """
    violations = validate(F)
    if violations:
        raise ValueError("invalid complex: " + "; ".join(violations))
    if F.n not in (2, 3):
        raise ValueError(f"bound reports cover 2- or 3-component links only, got {F.n}")

    clasps = total_clasps(F)
    provenance = {
        "upper_C": "clasp count of this complex",
        "lower_B": "sum of |lk| over pairs",
        "upper_B": "crossing change at each clasp",
    }

    if F.n == 2:
        lk = pairwise_linking(F, 1, 2)
        exact = two_component_clasp_number(lk)
        provenance["lower_C"] = "pairwise linking number"
        provenance["exact_C"] = "linking number determines the clasp number"
        return BoundReport(
            n=2,
            lower_C=abs(lk),
            upper_C=clasps,
            lower_B=abs(lk),
            upper_B=clasps,
            exact_C=exact,
            provenance=provenance,
        )

    pairs = ((1, 2), (2, 3), (3, 1))
    lks = {pair: pairwise_linking(F, *pair) for pair in pairs}
    sum_abs = sum(abs(v) for v in lks.values())
    exact_C: int | None = None
    if all(v == 0 for v in lks.values()):
        mu = triple_linking(F, 1, 2, 3).value
        lower_C = three_component_lower_bound(mu)
        provenance["lower_C"] = "triple linking lower bound"
    else:
        lower_C = sum_abs
        provenance["lower_C"] = "sum of |lk| over pairs"
    if lower_C == clasps:
        exact_C = clasps
        provenance["exact_C"] = "lower and upper bounds coincide"
    return BoundReport(
        n=3,
        lower_C=lower_C,
        upper_C=clasps,
        lower_B=sum_abs,
        upper_B=clasps,
        exact_C=exact_C,
        provenance=provenance,
    )
