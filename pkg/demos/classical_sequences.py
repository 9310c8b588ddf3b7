#!/usr/bin/env python3
"""Tour of the classical figurate families.

Prints the simplex, cross-polytope and hypercube number sequences for small
dimensions, shows the facet-cut identity at work, and lists interior counts.
"""
from polytopenums import (
    cross_polytope_number,
    facet_cut,
    hypercube_number,
    simplex_interior,
    simplex_number,
)

N = 10

print("Simplex numbers (triangular, tetrahedral, ... by rows d=1..5):")
for d in range(1, 6):
    print(f"  d={d}: ", [simplex_number(d, n) for n in range(1, N + 1)])

print("\nCross-polytope numbers (squares, octahedral numbers, ...):")
for d in range(2, 5):
    print(f"  d={d}: ", [cross_polytope_number(d, n) for n in range(1, N + 1)])

print("\nHypercube numbers (these are just n**d, via the Eulerian-weighted form):")
for d in range(2, 5):
    print(f"  d={d}: ", [hypercube_number(d, n) for n in range(1, N + 1)])

print("\nFacet cutting: each cut removes one facet of the array and shifts the")
print("index down by one, so k cuts on the n-th array leave the (n-k)-th:")
d, n = 3, 7
for k in range(4):
    print(f"  {k} cuts on the n={n} array of the {d}-simplex:", facet_cut(d, n, k))

print("\nInterior points of the d-simplex arrays (all d+1 facets stripped):")
for d in range(1, 5):
    print(f"  d={d}: ", [simplex_interior(d, n) for n in range(1, N + 1)])

print("\nSanity: triangle with 5 points per side has", simplex_number(2, 5), "points,")
print("of which", simplex_interior(2, 5), "are interior (12 sit on the boundary).")
