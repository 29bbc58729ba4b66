#!/usr/bin/env python3
# No image of the 3-point segment 0, 1/2, 1: a third point is never 2/3 from the 2-point space

from fractions import Fraction

from ghspace import gh_distance_exact, simplex, single_point
from ghspace.nonuniversality import run_demo

A, B = single_point(), simplex(2)
print("d(A,B) =", gh_distance_exact(A, B).distance)

# an image of C needs d(A,C) = 1/2, i.e. diameter 1, and d(B,C) = 2/3
# but every diameter-1 candidate stays within 1/2 of B
report = run_demo(60, seed=5)
worst = max(c.to_segment for c in report.candidates)
print("worst d(B,C):", worst, "<= 1/2:", worst <= Fraction(1, 2))
print("passed:", report.passed)
