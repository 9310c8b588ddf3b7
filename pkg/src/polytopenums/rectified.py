"""Rectified-simplex number sequences and their simplex-basis decompositions.

Rectifying the d-simplex at level r (truncating every vertex to the centers
of the incident r-faces) produces the polytope whose vertices are the
(r+1)-subsets of d+1 points.  Its point-count sequence is an alternating,
inclusion-exclusion style sum of stretched simplex sequences:

    value(d, r, n) = sum over i of (-1)**(r-i) C(d+1, r-i) A(d, (i+1)n - r)

where A is the clamped d-simplex sequence.  This module evaluates that sum,
its interior companion, and three independent routes to the coefficients
that rewrite such sequences in the basis A(d, n-j) of unit shifts.

The degenerate families with d <= r are still defined by the same formulas.
Their sign conventions (constant 1, interior (-1)**r for d == r, interior 0
for 0 < d < r) hold from n = 2 on; at n = 1 the clamped interior values make
every interior sequence start at 0.
"""
from __future__ import annotations

from .exact import binomial, gbinomial, poly_mul, poly_pow_truncated, poly_truncate
from .regular import simplex_interior, simplex_number


def _check_dimension(d: int, r: int) -> None:
    if d < 1:
        raise ValueError(f"dimension must be positive, got d={d}")
    if r < 0:
        raise ValueError(f"rectification level must be nonnegative, got r={r}")


def _check_shift(d: int, a: int, b: int) -> None:
    if d < 1:
        raise ValueError(f"dimension must be positive, got d={d}")
    if a < 1:
        raise ValueError(f"stretch factor must be positive, got a={a}")
    if b < 0:
        raise ValueError(f"offset must be nonnegative, got b={b}")


def _check_true_rectification(d: int, r: int) -> None:
    _check_dimension(d, r)
    if r >= d:
        raise ValueError(f"decomposition requires 0 <= r < d, got d={d} r={r}")


def rectified_simplex_number(d: int, r: int, n: int) -> int:
    """n-th point count of the r-rectified d-simplex (0 for n <= 0).

    Valid as a geometric count for 0 <= r < d; larger r evaluates the same
    alternating formula as a formal sequence.
    """
    _check_dimension(d, r)
    if n <= 0:
        return 0
    return sum(
        (-1) ** (r - i) * binomial(d + 1, r - i) * simplex_number(d, (i + 1) * n - r)
        for i in range(r + 1)
    )


def rectified_simplex_interior(d: int, r: int, n: int) -> int:
    """Interior point count of the n-th r-rectified d-simplex array."""
    _check_dimension(d, r)
    if n <= 0:
        return 0
    return sum(
        (-1) ** (r - i) * binomial(d + 1, r - i) * simplex_interior(d, (i + 1) * n + r - 2 * i)
        for i in range(r + 1)
    )


def _support_bound(d: int, a: int, b: int) -> int:
    # The shift coefficients come from multiplying (1-x)**(d+1) into the
    # series with k-th coefficient C(d+ak-b, ak-b).  Once ak-b >= -d that
    # coefficient agrees with a degree-d polynomial in k, whose series is a
    # rational function with denominator (1-x)**(d+1); only the finitely many
    # k with ak < b-d deviate.  Support therefore never extends past
    # d + ceil(max(b-d, 0)/a).
    return d + max(0, -((d - b) // a))


def _trim_to_support(coeffs: list[int], d: int, a: int, b: int) -> list[int]:
    bound = _support_bound(d, a, b)
    bad = [(j, c) for j, c in enumerate(coeffs) if j > bound and c != 0]
    if bad:
        raise ArithmeticError(
            f"shift coefficients for d={d} a={a} b={b} extend past index {bound}: {bad}"
        )
    return coeffs[: bound + 1]


def shift_decomposition(d: int, a: int, b: int) -> list[int]:
    """Coefficients rewriting a stretched simplex sequence over unit shifts.

    Returns c with simplex_number(d, a*n - (a-1) - b) equal to the sum of
    c[j] * simplex_number(d, n-j), valid whenever the left argument is >= 1.
    Computed by the explicit double sum.  The vector has length d+1 when
    b <= d; larger offsets push the support out to d + ceil((b-d)/a).  All
    coefficients past that bound are computed anyway and must vanish; a
    nonzero one raises ArithmeticError.
    """
    _check_shift(d, a, b)
    limit = d + a + b
    coeffs = [
        sum(
            (-1) ** i
            * binomial(d + 1, i)
            * binomial(d + a * (j - i) - b, a * (j - i) - b)
            for i in range(j + 1)
        )
        for j in range(limit + 1)
    ]
    return _trim_to_support(coeffs, d, a, b)


def shift_decomposition_gf(d: int, a: int, b: int) -> list[int]:
    """Same coefficients as shift_decomposition, via a power-series product.

    Reads the vector off (1-x)**(d+1) times the series whose k-th
    coefficient is C(d+ak-b, ak-b), truncated high enough to witness the
    vanishing tail.  Agrees with the double-sum route entry for entry.
    """
    _check_shift(d, a, b)
    deg = d + a + b + 2
    series = [binomial(d + a * k - b, a * k - b) for k in range(deg + 1)]
    window = poly_truncate(poly_mul(poly_pow_truncated([1, -1], d + 1, deg), series), deg)
    window = window + [0] * (deg + 1 - len(window))
    return _trim_to_support(window, d, a, b)


def eval_shift_identity(d: int, a: int, b: int, n: int) -> tuple[int, int]:
    """Both sides of the shift identity at index n.

    Returns (direct, recombined) where direct = simplex_number(d, a*n-(a-1)-b)
    and recombined applies the shift_decomposition coefficients.  The two are
    guaranteed equal whenever n >= 1 and a*n - (a-1) - b >= 1; below that
    threshold the clamping convention decides and equality is not promised.
    """
    coeffs = shift_decomposition(d, a, b)
    lhs = simplex_number(d, a * n - (a - 1) - b)
    rhs = sum(c * simplex_number(d, n - j) for j, c in enumerate(coeffs))
    return lhs, rhs


def rectified_decomposition(d: int, r: int) -> list[int]:
    """Simplex-basis coefficients of the r-rectified d-simplex sequence.

    Returns (a_0 .. a_{d-1}) with the rectified sequence equal to the sum of
    a_j * simplex_number(d, n-j), built by expanding each stretched term of
    the alternating formula through shift_decomposition and combining.
    Requires 0 <= r < d.  The combined coefficient at index d must vanish;
    if it does not, ArithmeticError is raised.
    """
    _check_true_rectification(d, r)
    acc = [0] * (d + 1)
    for i in range(r + 1):
        weight = (-1) ** (r - i) * binomial(d + 1, r - i)
        for j, c in enumerate(shift_decomposition(d, i + 1, r - i)):
            acc[j] += weight * c
    if acc[d] != 0:
        raise ArithmeticError(
            f"rectified decomposition for d={d} r={r} has nonzero coefficient at index {d}"
        )
    return acc[:d]


def rectified_decomposition_gbinom(d: int, r: int) -> list[int]:
    """Simplex-basis coefficients via generalized binomial coefficients.

    Independent route: a_j is the alternating C(d+1, r-i)-weighted sum of
    order-(i+1) generalized binomials of d+1 at position (i+1)j + i - r.
    Must agree with rectified_decomposition entry for entry.
    """
    _check_true_rectification(d, r)
    return [
        sum(
            (-1) ** (r - i)
            * binomial(d + 1, r - i)
            * gbinomial(d + 1, (i + 1) * j + i - r, i + 1)
            for i in range(r + 1)
        )
        for j in range(d)
    ]


def rectified_via_decomposition(d: int, r: int, n: int) -> int:
    """Rectified-simplex value recombined from its decomposition coefficients.

    Uses the generalized-binomial route; must reproduce
    rectified_simplex_number(d, r, n) for every n >= 1.
    """
    _check_true_rectification(d, r)
    if n <= 0:
        return 0
    coeffs = rectified_decomposition_gbinom(d, r)
    return sum(c * simplex_number(d, n - j) for j, c in enumerate(coeffs))
