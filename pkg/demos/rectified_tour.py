#!/usr/bin/env python3
"""Rectified simplices and their simplex-basis decompositions.

Rectifying the d-simplex at level r cuts every vertex back to the centers of
the incident r-faces; the resulting point-count sequences decompose over
shifted simplex sequences with small nonnegative coefficients, and two
independent routes produce the same coefficient vectors.
"""
from polytopenums import (
    eval_shift_identity,
    rectified_decomposition,
    rectified_decomposition_gbinom,
    rectified_simplex_interior,
    rectified_simplex_number,
    shift_decomposition,
)

print("Rectified tetrahedron (the octahedron) and friends:")
for d, r in [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2)]:
    values = [rectified_simplex_number(d, r, n) for n in range(1, 9)]
    print(f"  d={d} r={r}: {values}")

print("\nInterior counts for the octahedron (first interior point shows at n=3):")
print("  ", [rectified_simplex_interior(3, 1, n) for n in range(1, 9)])

print("\nDecomposition coefficients over simplex shifts, rows (d, r):")
for d in range(2, 7):
    for r in range(d):
        print(f"  d={d} r={r}: {rectified_decomposition(d, r)}")

print("\nThe generalized-binomial route reproduces the same vectors:")
agree = all(
    rectified_decomposition(d, r) == rectified_decomposition_gbinom(d, r)
    for d in range(1, 9)
    for r in range(d)
)
print("  all pairs with r < d <= 8 agree:", agree)

print("\nThe raw material: stretched sequences rewritten over unit shifts.")
print("Coefficients for index maps n -> a*n-(a-1)-b in dimension d=3:")
for a, b in [(1, 0), (2, 0), (3, 0), (2, 1), (2, 2)]:
    print(f"  a={a} b={b}: {shift_decomposition(3, a, b)}")

print("\nSpot check of the stretch identity at d=3, a=2, b=0, n=4:")
lhs, rhs = eval_shift_identity(3, 2, 0, 4)
print(f"  direct value {lhs} vs recombined value {rhs}")
