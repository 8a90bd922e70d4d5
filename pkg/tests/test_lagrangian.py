"""Model assembly, Maslov/area pairings, monotonicity, psi, deck action."""

import math
from fractions import Fraction

import numpy as np
import pytest

from polylag import (
    GateError,
    LagrangianModel,
    TorusData,
    build_model,
    build_model_from_quadrics,
    deck_representatives,
    deck_transform,
    generator_pairing,
    minimal_maslov,
    moment_map,
    monotonicity,
    presentation,
    psi_eval,
    psi_eval_complex,
    quadric_system,
    trapezoid_presentation,
    unit_square_presentation,
)
from polylag.families import simplex_product_quadrics, stretched_quadrics


def trapezoid_model(k=2):
    return build_model(trapezoid_presentation(k))


def section4_model(n=10, p=4, k=2):
    return build_model_from_quadrics(simplex_product_quadrics(n, p, k))


def test_build_model_trapezoid():
    M = trapezoid_model()
    assert M.t == (2, 4)
    assert not M.monotone and M.fano_C is None
    assert M.embedded and not M.immersed_only
    assert M.r_simply_connected is False  # torus fiber


def test_build_model_section4():
    M = section4_model()
    assert M.t == (4, 8)
    assert M.monotone and M.fano_C == 1
    assert M.embedded
    assert M.r_simply_connected is True


def test_build_model_stretched():
    M = build_model_from_quadrics(stretched_quadrics(2, 4))
    assert M.t == (4, 12)
    assert not M.monotone


def test_build_model_gates():
    cone = presentation(2, [(1, 0), (0, 1)], [0, 0])
    with pytest.raises(GateError, match="simple bounded"):
        build_model(cone)
    redundant = presentation(
        2, [(1, 0), (0, 1), (-1, 0), (0, -1), (-1, 0)], [0, 0, 1, 1, 2]
    )
    with pytest.raises(GateError, match="redundant"):
        build_model(redundant)


def test_non_delzant_model_is_immersed_only():
    tri = presentation(2, [(1, 0), (0, 1), (-1, -2)], [0, 0, 2])
    M = build_model(tri)
    assert M.immersed_only
    assert M.delzant_witness is not None
    with pytest.raises(GateError, match="immersed"):
        generator_pairing(M)


def test_generator_pairing_values():
    M = section4_model()
    pairings = generator_pairing(M)
    assert [p.maslov for p in pairings] == [4, 8]
    assert [p.area_coeff for p in pairings] == [Fraction(2), Fraction(4)]
    assert pairings[0].area == pytest.approx(2 * math.pi)

    Msq = build_model(unit_square_presentation())
    sq = generator_pairing(Msq)
    assert [p.maslov for p in sq] == [2, 2]
    assert [p.area_coeff for p in sq] == [Fraction(1, 2), Fraction(1, 2)]


def test_generator_pairing_zero_delta_gives_zero_areas():
    # degenerate cone data; assembled directly since the gates reject it
    Q = quadric_system([(1, 0, -1, 0), (0, 1, 0, -1)], [0, 0])
    M = LagrangianModel(
        quadrics=Q,
        torus=TorusData(((1, 0), (0, 1)), ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))), 2),
        t=Q.maslov_vector,
        fano_C=None,
        monotone=False,
        embedded=True,
        delzant_witness=None,
        r_simply_connected=None,
        presentation=trapezoid_presentation(0),
    )
    assert all(p.area_coeff == 0 for p in generator_pairing(M))


def test_minimal_maslov():
    assert minimal_maslov(section4_model(10, 4, 2)) == 4
    assert minimal_maslov(section4_model(14, 6, 0)) == 2
    assert minimal_maslov(trapezoid_model(2)) == 2


def test_minimal_maslov_vanishing_gate():
    Q = quadric_system([(1, 0, -1, 0), (0, 1, 0, -1)], [0, 0])
    M = LagrangianModel(
        quadrics=Q,
        torus=TorusData(((1, 0), (0, 1)), ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))), 2),
        t=Q.maslov_vector,
        fano_C=None,
        monotone=False,
        embedded=True,
        delzant_witness=None,
        r_simply_connected=None,
        presentation=trapezoid_presentation(0),
    )
    with pytest.raises(GateError, match="vanishes"):
        minimal_maslov(M)


def test_minimal_maslov_invariance():
    base = simplex_product_quadrics(10, 4, 2)
    g = [list(r) for r in base.gamma]
    d = list(base.delta)
    mixed = quadric_system(
        [[a + b for a, b in zip(g[0], g[1])], g[1]], [d[0] + d[1], d[1]]
    )
    assert minimal_maslov(build_model_from_quadrics(mixed)) == 4
    perm = list(reversed(range(base.ambient_n)))
    permuted = quadric_system([[row[i] for i in perm] for row in g], d)
    assert minimal_maslov(build_model_from_quadrics(permuted)) == 4


def test_monotonicity_reports():
    assert monotonicity(trapezoid_model()) is None
    C, report = monotonicity(section4_model())
    assert C == 1
    assert report["simply_connected_hypothesis"] is True
    Csq, rep_sq = monotonicity(build_model(unit_square_presentation()))
    assert Csq == Fraction(1, 2)
    assert rep_sq["simply_connected_hypothesis"] is False


def test_monotone_iff_fano_both_directions():
    # non-Fano trapezoids are non-monotone; Fano square and family are monotone
    for k in (1, 2, 4):
        M = trapezoid_model(k)
        assert (M.fano_C is not None) == M.monotone == False
    for M in (build_model(unit_square_presentation()), section4_model()):
        assert M.monotone and M.fano_C is not None


def test_psi_eval_identity_angle():
    M = trapezoid_model()
    u = (1.0, 1.0, 0.0, 0.0)
    xy = psi_eval(M, u, (0, 0))
    assert xy == [1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]


def test_psi_eval_trapezoid_quarter_turn():
    M = trapezoid_model()
    xy = psi_eval(M, (1, 1, 0, 0), (Fraction(1, 2), 0))
    assert xy == pytest.approx([1, 0, 0, 1, 0, 0, 0, 0], abs=1e-15)


def test_psi_eval_section4_sign_flip():
    n, p, k = 10, 4, 2
    M = section4_model(n, p, k)
    u = [0.0] * n
    u[p - 1] = math.sqrt(p)
    u[n - 1] = math.sqrt(n - p + k)
    z0 = psi_eval_complex(M, u, (0, 0))
    z1 = psi_eval_complex(M, u, (1, 0))
    assert z1[p - 1] == pytest.approx(-z0[p - 1])
    assert z1[n - 1] == pytest.approx(z0[n - 1])


def test_psi_eval_membership_gate():
    M = trapezoid_model()
    with pytest.raises(GateError, match="quadric locus"):
        psi_eval(M, (5, 5, 5, 5), (0, 0))


def test_deck_transform_trapezoid():
    M = trapezoid_model()
    eps1 = M.torus.eps[0]
    u2, phi2 = deck_transform(M, eps1, (1, 2, 3, 4), (Fraction(0), Fraction(0)))
    assert u2 == (1, -2, -3, 4)
    assert phi2 == (1, 0)


def test_deck_transform_identity_and_square():
    M = trapezoid_model()
    u, phi = deck_transform(M, (0, 0), (1, 2, 3, 4), (0, 0))
    assert u == (1, 2, 3, 4) and phi == (0, 0)
    eps1 = M.torus.eps[0]
    out = deck_transform(M, eps1, *deck_transform(M, eps1, (1, 2, 3, 4), (0, 0)))
    assert out[0] == (1, 2, 3, 4)
    assert out[1] == (2, 0)


def test_deck_transform_dual_lattice_gate():
    M = trapezoid_model()
    with pytest.raises(GateError, match="dual lattice"):
        deck_transform(M, (Fraction(1, 3), 0), (1, 2, 3, 4), (0, 0))


def test_psi_equivariance_under_deck_group():
    from polylag import sample_lagrangian

    for M in (trapezoid_model(), section4_model()):
        S = sample_lagrangian(M, 5, seed=3)
        reps = deck_representatives(M)
        assert len(reps) == 2**M.torus.deck_rank
        for u, phi in S.points:
            base = psi_eval(M, u, phi, tol=1e-9)
            for g in reps:
                u2, phi2 = deck_transform(M, g, tuple(u), tuple(phi))
                moved = psi_eval(M, u2, phi2, tol=1e-9)
                assert np.max(np.abs(np.array(base) - np.array(moved))) < 1e-12


def test_psi_image_on_moment_angle_manifold():
    for M in (trapezoid_model(), section4_model()):
        from polylag import sample_lagrangian

        S = sample_lagrangian(M, 5, seed=11)
        for u, phi in S.points:
            z = psi_eval_complex(M, u, phi)
            values = moment_map(M.quadrics.gamma, z)
            assert all(
                abs(v - float(d)) < 1e-10 for v, d in zip(values, M.quadrics.delta)
            )


def test_invariants_well_defined_under_quadric_rescaling():
    # doubling one quadric leaves the real locus (and the Lagrangian)
    # unchanged but makes the torus lattice a proper sublattice; all
    # invariants must agree with the standard trapezoid model
    scaled = quadric_system([[0, 2, 2, 0], [1, 2, 0, 1]], [2, 3])
    M = build_model_from_quadrics(scaled)
    assert M.torus.lattice_basis == ((2, 0), (0, 1))
    assert M.torus.eps[0] == (Fraction(1, 2), Fraction(0))
    reference = build_model(trapezoid_presentation(2))
    assert [(p.maslov, p.area_coeff) for p in generator_pairing(M)] == [
        (p.maslov, p.area_coeff) for p in generator_pairing(reference)
    ]
    assert minimal_maslov(M) == minimal_maslov(reference) == 2
    assert M.monotone == reference.monotone == False
