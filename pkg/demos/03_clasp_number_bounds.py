#!/usr/bin/env python3
"""Walkthrough: bounding the clasp number.

C(L) is the minimum number of clasps over all C-complexes bounded by L,
and B(L) the minimum number of crossing changes to reach a boundary
link; sum |lk| <= B(L) <= C(L).  For two components a nonzero linking
number pins C(L) = |lk| exactly.  For three components with vanishing
pairwise linking, C(L) >= 2*ceil(2*sqrt(|mu|/3)): a complex with few
clasps would force a short clasp word, and a short word cannot trace a
curve enclosing much area.
"""

from pathlib import Path

from clasplink import (
    bound_report,
    generate_brn,
    parse_complex,
    three_component_lower_bound,
    two_component_clasp_number,
)

DATA = Path(__file__).resolve().parents[1] / "data"

print(__doc__)

print("A wasteful 2-component presentation (3 clasps, linking number 1):")
F = parse_complex((DATA / "two_component_three_clasps.cc").read_text())
print(bound_report(F).format())

print("Borromean rings: the lower bound meets the 4-clasp complex, so C = 4:")
print(bound_report(parse_complex((DATA / "borromean.cc").read_text())).format())

print("The n-fold family squeezes C between the mu bound and 4n:")
for n in range(1, 7):
    report = bound_report(generate_brn(n))
    print(f"  n={n}: {report.summary()}")
print()

print("The raw bound functions, exact at perfect squares:")
for lk in (0, 1, -5):
    print(f"  two components, lk={lk}: C = {two_component_clasp_number(lk)}")
for mu in (0, 1, 3, 4, 12, 100):
    print(f"  three components, mu={mu}: C >= {three_component_lower_bound(mu)}")
