"""Exact integer combinatorics primitives.

Everything in this package is computed with plain Python integers, so all
arithmetic is arbitrary precision and exact; no floating point is used
anywhere.  Polynomials are plain lists of ints, index j holding the
coefficient of x**j.
"""
from __future__ import annotations

import math
from functools import lru_cache


def binomial(r: int, k: int) -> int:
    """Binomial coefficient C(r, k) for arbitrary integer r and k.

    Returns 0 for k < 0.  For r >= 0 this is the ordinary coefficient
    (0 when k > r).  Negative r follows the falling-factorial definition
    r(r-1)...(r-k+1)/k!, equivalently C(r, k) = (-1)**k * C(k-r-1, k),
    which is what the upper-index negation identity requires.
    """
    if k < 0:
        return 0
    if r >= 0:
        return math.comb(r, k) if k <= r else 0
    value = math.comb(k - r - 1, k)
    return -value if k % 2 else value


def gbinomial(n: int, m: int, s: int) -> int:
    """Generalized binomial coefficient of order s.

    Defined as the coefficient of x**m in (1 + x + ... + x**(s-1))**n.
    Order 2 reduces to the ordinary binomial C(n, m).  Requires n >= 0 and
    s >= 1; out-of-range m gives 0.
    """
    if s < 1:
        raise ValueError(f"order must be a positive integer, got s={s}")
    if n < 0:
        raise ValueError(f"upper argument must be nonnegative, got n={n}")
    if m < 0 or m > n * (s - 1):
        return 0
    return _gbinomial_row(n, s)[m]


@lru_cache(maxsize=None)
def _gbinomial_row(n: int, s: int) -> tuple[int, ...]:
    row = [1]
    for _ in range(n):
        row = poly_mul(row, [1] * s)
    return tuple(row)


def eulerian(d: int, i: int) -> int:
    """Eulerian number: permutations of d elements with exactly i descents.

    Computed by the recurrence E(d, i) = (i+1) E(d-1, i) + (d-i) E(d-1, i-1)
    with E(0, 0) = 1.  Zero outside 0 <= i <= max(d-1, 0).
    """
    if d < 0:
        raise ValueError(f"dimension must be nonnegative, got d={d}")
    row = _eulerian_row(d)
    return row[i] if 0 <= i < len(row) else 0


@lru_cache(maxsize=None)
def _eulerian_row(d: int) -> tuple[int, ...]:
    if d == 0:
        return (1,)
    prev = _eulerian_row(d - 1)

    def at(j: int) -> int:
        return prev[j] if 0 <= j < len(prev) else 0

    return tuple((i + 1) * at(i) + (d - i) * at(i - 1) for i in range(max(d, 1)))


def poly_trim(p: list[int]) -> list[int]:
    """Canonical form: drop trailing zero coefficients (zero polynomial -> [])."""
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_truncate(p: list[int], deg: int) -> list[int]:
    """Discard every term of degree above deg."""
    if deg < 0:
        return []
    return poly_trim(p[: deg + 1])


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    """Exact convolution product.  Schoolbook; degrees stay small here."""
    p, q = poly_trim(p), poly_trim(q)
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_pow_truncated(p: list[int], e: int, deg: int) -> list[int]:
    """p**e with every term of degree above deg discarded; exact below the cutoff."""
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got e={e}")
    if deg < 0:
        raise ValueError(f"truncation degree must be nonnegative, got deg={deg}")
    base = poly_truncate(p, deg)
    out = [1]
    for _ in range(e):
        out = poly_truncate(poly_mul(out, base), deg)
    return out
