"""Tests for the recursive face-lattice oracle."""
import pytest

from polytopenums.oracle import (
    POINT,
    FaceCensus,
    Hypersimplex,
    Point,
    cross_polytope,
    faces_of,
    hypercube,
    hypersimplex,
    interior_number,
    oracle_report,
    polytope_number,
    rectified_simplex_descriptor,
    simplex,
)
from polytopenums.rectified import rectified_simplex_interior, rectified_simplex_number
from polytopenums.regular import (
    cross_polytope_number,
    hypercube_number,
    simplex_interior,
    simplex_number,
)


def plain_number(p, n):
    """Recursion without memoization, for cache-consistency checks."""
    if n <= 0:
        return 0
    if isinstance(p, Point) or n == 1:
        return 1
    return plain_number(p, n - 1) + sum(
        e.not_containing * plain_interior(e.face, n) for e in faces_of(p).entries
    )


def plain_interior(p, n):
    if n <= 0:
        return 0
    if isinstance(p, Point):
        return 1
    if n == 1:
        return 0
    return plain_number(p, n) - sum(
        e.total * plain_interior(e.face, n) for e in faces_of(p).entries
    )


class TestDescriptors:
    def test_canonicalization(self):
        assert simplex(0) is POINT
        assert hypersimplex(5, 0) is POINT
        assert hypersimplex(5, 5) is POINT
        assert hypersimplex(2, 1) == simplex(1)
        assert hypersimplex(4, 3) == hypersimplex(4, 1) == simplex(3)
        assert hypersimplex(7, 5) == hypersimplex(7, 2)
        assert rectified_simplex_descriptor(3, 1) == hypersimplex(4, 2)
        assert rectified_simplex_descriptor(4, 3) == simplex(4)  # dual collapses

    def test_dimensions(self):
        assert POINT.dimension == 0
        assert simplex(3).dimension == 3
        assert cross_polytope(4).dimension == 4
        assert hypercube(2).dimension == 2
        assert hypersimplex(6, 2).dimension == 5

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            hypersimplex(1, 0)
        with pytest.raises(ValueError):
            hypersimplex(4, 5)
        with pytest.raises(ValueError):
            simplex(-1)
        with pytest.raises(ValueError):
            rectified_simplex_descriptor(3, 3)
        with pytest.raises(ValueError):
            Hypersimplex(4, 1)  # must go through the canonicalizing factory


class TestCensus:
    def test_triangle(self):
        census = faces_of(simplex(2))
        assert [(e.dim, e.total, e.not_containing) for e in census.entries] == [
            (0, 3, 2),
            (1, 3, 1),
        ]

    def test_octahedron(self):
        census = faces_of(hypersimplex(4, 2))
        assert census.f_vector() == (6, 12, 8)
        assert [(e.dim, e.total, e.not_containing) for e in census.entries] == [
            (0, 6, 5),
            (1, 12, 8),
            (2, 8, 4),
        ]
        # Vertex figure: 4 edges and 4 triangles meet at each vertex.
        assert [e.containing for e in census.entries] == [1, 4, 4]
        assert all(e.face == simplex(e.dim) for e in census.entries)

    def test_rectified_four_simplex(self):
        census = faces_of(hypersimplex(5, 2))
        assert census.f_vector() == (10, 30, 30, 10)
        cells = {e.face: e.total for e in census.entries_of_dim(3)}
        assert cells == {simplex(3): 5, hypersimplex(4, 2): 5}

    def test_cross_polytope_and_cube(self):
        octa = faces_of(cross_polytope(3))
        assert octa.f_vector() == (6, 12, 8)
        cube = faces_of(hypercube(3))
        assert cube.f_vector() == (8, 12, 6)
        assert [e.containing for e in cube.entries] == [1, 3, 3]

    def test_euler_relation_everywhere(self):
        seen = set()
        stack = [simplex(8), cross_polytope(6), hypercube(6)]
        stack += [hypersimplex(m, s) for m in range(4, 10) for s in range(2, m // 2 + 1)]
        while stack:
            p = stack.pop()
            if p in seen or isinstance(p, Point):
                continue
            seen.add(p)
            census = faces_of(p)
            assert census.euler_ok(), p
            for e in census.entries:
                assert 0 <= e.not_containing <= e.total
                stack.append(e.face)
        assert len(seen) > 25  # the walk really closed over sub-faces

    def test_point_has_no_census(self):
        with pytest.raises(ValueError):
            faces_of(POINT)


class TestRecursion:
    def test_examples(self):
        assert polytope_number(simplex(2), 3) == 6
        assert polytope_number(POINT, 7) == 1
        assert polytope_number(hypersimplex(4, 2), 3) == 19
        assert interior_number(simplex(1), 5) == 3
        assert interior_number(hypersimplex(4, 2), 3) == 1
        for p in (simplex(3), cross_polytope(2), hypersimplex(5, 2)):
            assert interior_number(p, 1) == 0

    def test_report_examples(self):
        # Interior column of the triangle table is C(n-2, 2): 0, 0, 0, 0, 1.
        assert oracle_report(simplex(2), 4) == [
            (0, 0, 0),
            (1, 1, 0),
            (2, 3, 0),
            (3, 6, 0),
            (4, 10, 1),
        ]
        assert [v for _, v, _ in oracle_report(cross_polytope(2), 3)] == [0, 1, 4, 9]
        assert [v for _, v, _ in oracle_report(hypercube(3), 3)] == [0, 1, 8, 27]

    def test_report_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            oracle_report(simplex(2), 0)

    def test_memoized_matches_plain_recursion(self):
        for d in range(5):
            p = simplex(d)
            for n in range(11):
                assert polytope_number(p, n) == plain_number(p, n)
                assert interior_number(p, n) == plain_interior(p, n)

    def test_matches_simplex_formulas(self):
        for d in range(9):
            p = simplex(d)
            for n in range(1, 26):
                assert polytope_number(p, n) == simplex_number(d, n)
                assert interior_number(p, n) == simplex_interior(d, n)

    def test_matches_cross_polytope_and_cube_formulas(self):
        for d in range(1, 7):
            for n in range(1, 26):
                assert polytope_number(cross_polytope(d), n) == cross_polytope_number(d, n)
                assert polytope_number(hypercube(d), n) == hypercube_number(d, n)

    def test_matches_rectified_formulas(self):
        for d in range(2, 8):
            for r in range(1, d):
                p = rectified_simplex_descriptor(d, r)
                for n in range(1, 26):
                    assert polytope_number(p, n) == rectified_simplex_number(d, r, n)
                    assert interior_number(p, n) == rectified_simplex_interior(d, r, n)

    def test_census_is_cached_per_descriptor(self):
        assert faces_of(simplex(5)) is faces_of(simplex(5))
        assert isinstance(faces_of(simplex(5)), FaceCensus)
