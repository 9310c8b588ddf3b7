"""Closed-form number sequences for the regular polytopes.

The d-simplex sequence is the basic building block: every other family is a
finite binomially-weighted sum of shifted simplex sequences.  Sequence
arguments are clamped, so any index n <= 0 yields 0; this keeps the shifted
sums safe even when a shift pushes the argument far negative.
"""
from __future__ import annotations

from .exact import binomial, eulerian


def simplex_number(d: int, n: int) -> int:
    """Number of points in the n-th d-simplex array: C(n+d-1, d), 0 for n <= 0."""
    if d < 0:
        raise ValueError(f"dimension must be nonnegative, got d={d}")
    if n <= 0:
        return 0
    return binomial(n + d - 1, d)


def simplex_interior(d: int, n: int) -> int:
    """Points of the n-th d-simplex array on no facet: C(n-2, d), 0 for n <= 1.

    Equals simplex_number(d, n-d-1), i.e. the result of cutting away all
    d+1 facets.  The 0-dimensional case is special: a point is its own
    interior, so the sequence is already 1 at n = 1.
    """
    if d < 0:
        raise ValueError(f"dimension must be nonnegative, got d={d}")
    if n <= 0:
        return 0
    if d == 0:
        return 1
    if n == 1:
        return 0
    return binomial(n - 2, d)


def cross_polytope_number(d: int, n: int) -> int:
    """Number of points in the n-th d-cross-polytope array (d >= 1)."""
    if d < 1:
        raise ValueError(f"dimension must be positive, got d={d}")
    return sum(binomial(d - 1, i) * simplex_number(d, n - i) for i in range(d))


def hypercube_number(d: int, n: int) -> int:
    """Number of points in the n-th d-hypercube array, i.e. n**d (d >= 1).

    Evaluated as the Eulerian-weighted sum of shifted simplex sequences
    rather than as a power, so the closed form itself is exercised.
    """
    if d < 1:
        raise ValueError(f"dimension must be positive, got d={d}")
    return sum(eulerian(d, i) * simplex_number(d, n - i) for i in range(d))


def facet_cut(d: int, n: int, k: int) -> int:
    """Size of the d-simplex array after removing k facets one at a time.

    Each cut removes one facet's points and shifts the index down by one,
    so the result is simplex_number(d, n-k).
    """
    if d < 0 or k < 0:
        raise ValueError(f"dimension and cut count must be nonnegative, got d={d} k={k}")
    return simplex_number(d, n - k)
