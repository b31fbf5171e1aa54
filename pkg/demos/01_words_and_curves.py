#!/usr/bin/env python3
"""Walkthrough: clasp words and the lattice curves they trace.

A clasp word is a sequence of signed letters x_i.  Fixing two indices
(i, j) turns a word into a walk on the integer grid: x_i steps right,
x_i^-1 left, x_j up, x_j^-1 down.  The signed count of "x_i appears
before x_j" equals the line integral of x dy along that walk, so for a
simple counterclockwise loop it is literally the enclosed area.
"""

from clasplink import build_curve, e_ij, parse_word


def show(text):
    w = parse_word(text)
    curve = build_curve(w, 1, 2)
    print(f"word      : {w}")
    print(f"vertices  : {' -> '.join(str(v) for v in curve.vertices)}")
    closed = curve.is_closed()
    print(f"closed    : {closed}" + (f", simple: {curve.is_simple()}" if closed else ""))
    print(f"pair count: e_12 = {e_ij(w, 1, 2)}")
    print(f"integral  : {curve.line_integral_x_dy()}")
    print()


print(__doc__)

print("The commutator word walks once around a unit square:")
show("x1 x2 x1^-1 x2^-1")

print("A two-step staircase encloses three cells:")
show("x1 x2 x1 x2 x1^-2 x2^-2")

print("Letters with other indices leave the curve alone:")
show("x3 x1 x3^-1 x2 x3 x1^-1 x2^-1")

print("An unbalanced word gives an open path (the integral still makes sense):")
show("x1 x2 x2")

print("Reversing orientation negates the integral:")
curve = build_curve(parse_word("x1 x2 x1^-1 x2^-1"), 1, 2)
print(f"forward  : {curve.line_integral_x_dy()}")
print(f"reversed : {curve.reversed().line_integral_x_dy()}")
