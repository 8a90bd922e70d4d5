"""Polytope <-> quadric dictionary, membership, moment map, topology hints."""

import math
from fractions import Fraction

import pytest

from polylag import (
    GateError,
    combinatorially_equivalent,
    membership,
    moment_map,
    nondegenerate,
    polytope_of,
    presentation,
    presentation_report,
    quadric_system,
    quadrics_of,
    standard_simplex_product_presentation,
    topology_hint,
    trapezoid_presentation,
    unit_square_presentation,
)
from polylag import exactlin
from polylag.families import simplex_product_quadrics, stretched_quadrics


def trapezoid_system():
    return quadrics_of(trapezoid_presentation(2))


def test_quadrics_of_trapezoid():
    Q = trapezoid_system()
    assert Q.gamma == ((0, 1, 1, 0), (1, 2, 0, 1))
    assert Q.delta == (1, 3)
    assert Q.maslov_vector == (2, 4)


def test_quadrics_of_full_dim_square_lattice():
    # unimodular square A, k = n: no relations at all
    P = presentation(2, [(1, 0), (0, 1)], [0, 0])
    Q = quadrics_of(P)
    assert Q.gamma == () and Q.delta == ()


def test_quadrics_of_rank_gate():
    P = presentation(2, [(1, 0), (2, 0), (-1, 0)], [0, 0, 1])
    with pytest.raises(GateError, match="span"):
        quadrics_of(P)


def test_polytope_of_trapezoid_round_trip():
    Q = trapezoid_system()
    P = polytope_of(Q)
    assert combinatorially_equivalent(P, trapezoid_presentation(2))
    Q2 = quadrics_of(P)
    assert Q2.gamma == Q.gamma and Q2.delta == Q.delta


def test_polytope_of_empty_gamma_is_unbounded_orthant():
    Q = quadric_system([], [], ambient_n=3, solution_dim=3)
    P = polytope_of(Q)
    assert P.normals == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert all(b == 0 for b in P.b)
    assert not presentation_report(P).bounded


def test_polytope_of_section4_combinatorics():
    # the two-quadric system in n coordinates realizes Delta^{p-1} x Delta^{n-p-1}
    Q = simplex_product_quadrics(10, 4, 2)
    P = polytope_of(Q)
    rep = presentation_report(P)
    assert rep.bounded and rep.simple and rep.vertex_count == 4 * 6
    assert combinatorially_equivalent(P, standard_simplex_product_presentation(3, 5))


def test_round_trip_preserves_row_space_and_delta():
    for Q in (trapezoid_system(), simplex_product_quadrics(12, 4, 2), stretched_quadrics(2, 4)):
        Q2 = quadrics_of(polytope_of(Q))
        # rows of Q2.gamma must be an integer change of basis of Q.gamma
        rows = [list(r) for r in Q.gamma]
        change = []
        for row2 in Q2.gamma:
            coeffs = exactlin.solve_linear(exactlin.transpose(rows), list(row2))
            assert coeffs is not None
            assert all(c.denominator == 1 for c in coeffs)
            change.append([int(c) for c in coeffs])
        assert abs(exactlin.det(change)) == 1
        assert list(Q2.delta) == exactlin.mat_vec(change, list(Q.delta))


def test_nondegenerate_cases():
    assert nondegenerate(trapezoid_system())
    assert not nondegenerate(quadric_system([(1, 1)], [-1]))
    tangent = presentation(
        2, [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1)], [0, 0, 1, 1, 0]
    )
    assert not nondegenerate(quadrics_of(tangent))
    assert nondegenerate(quadric_system([], [], ambient_n=2, solution_dim=2))


def test_nondegenerate_matches_report():
    Q = trapezoid_system()
    rep = presentation_report(polytope_of(Q))
    assert nondegenerate(Q) == (rep.generic and rep.vertex_count > 0)


def test_membership_exact_and_float():
    Q = trapezoid_system()
    assert membership(Q, (1, 0, 1, math.sqrt(2)), 1e-12)
    # default: exact inputs exactly, float inputs within 1e-9
    assert membership(Q, (1, 0, 1, math.sqrt(2)))
    assert not membership(Q, (1, 1, 1, 1))
    assert not membership(Q, (0, 0, 0, 0))
    assert membership(Q, (Fraction(1), Fraction(0), Fraction(1), Fraction(0)), 0) is False
    assert membership(Q, (1, 1, 0, 0), 0)  # 1 + 2*1 + 0 = 3 exactly
    with pytest.raises(ValueError, match="dimension"):
        membership(Q, (1, 0, 0), 0)


def test_membership_section4_disc_point():
    n, p, k = 10, 4, 2
    Q = simplex_product_quadrics(n, p, k)
    u = [0.0] * n
    u[p - 1] = math.sqrt(p)
    u[n - 1] = math.sqrt(n - p + k)
    assert membership(Q, u, 1e-12)


def test_moment_map():
    Q = trapezoid_system()
    assert moment_map(Q.gamma, [1 + 0j, 1 + 0j, 0j, 0j]) == [1.0, 3.0]
    assert moment_map(Q.gamma, [(1, 0), (1, 0), (0, 0), (0, 0)]) == list(Q.delta)
    assert moment_map(Q.gamma, [0j, 0j, 0j, 0j]) == [0.0, 0.0]
    with pytest.raises(ValueError, match="dimension"):
        moment_map(Q.gamma, [1 + 0j])


def test_moment_map_agrees_with_membership_on_real_points():
    Q = trapezoid_system()
    u = (Fraction(1), Fraction(1), Fraction(0), Fraction(0))
    assert membership(Q, u, 0)
    assert moment_map(Q.gamma, u) == list(Q.delta)


def test_topology_hints():
    from polylag import simplex_product_presentation

    hint = topology_hint(simplex_product_presentation(10, 4, 2))
    assert hint.description == "S^3 x S^5"
    assert topology_hint(trapezoid_presentation(2)).description == "T^2"
    assert topology_hint(unit_square_presentation()).description == "T^2"
    pentagon = presentation(
        2, [(1, 0), (0, 1), (-1, 0), (0, -1), (-1, -1)], [0, 0, 2, 2, 3]
    )
    assert topology_hint(pentagon).description == "unknown"


def test_topology_hint_redundant_gate():
    # unit square plus a facet tight nowhere: simple but redundant
    P = presentation(2, [(1, 0), (0, 1), (-1, 0), (0, -1), (-1, 0)], [0, 0, 1, 1, 2])
    with pytest.raises(GateError, match="disjoint"):
        topology_hint(P)


def test_gamma_annihilates_normals():
    for P in (trapezoid_presentation(3), unit_square_presentation()):
        Q = quadrics_of(P)
        for row in Q.gamma:
            assert all(
                sum(r * a[j] for r, a in zip(row, P.normals)) == 0
                for j in range(P.dim)
            )
        assert exactlin.invariant_factors([list(r) for r in Q.gamma]) == [1] * len(Q.gamma)


def test_stretched_quadrics_round_trip_exact():
    Q = stretched_quadrics(2, 4)
    Q2 = quadrics_of(polytope_of(Q))
    assert Q2.gamma == Q.gamma and Q2.delta == Q.delta


def test_stretched_polytope_combinatorics():
    Q = stretched_quadrics(2, 4)
    P = polytope_of(Q)
    rep = presentation_report(P)
    assert rep.bounded and rep.simple and rep.vertex_count == 16
    assert combinatorially_equivalent(P, standard_simplex_product_presentation(3, 3))
