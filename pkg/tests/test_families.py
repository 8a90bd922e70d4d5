"""Family constructors, disc spectra, the invariant m, non-isotopy reports."""

from math import gcd

import pytest

from polylag import (
    GateError,
    disc_spectrum,
    distinguish,
    invariant_m,
    minimal_maslov,
    simplex_product_family,
    smooth_isotopy_class_count,
    stretched_family,
)


def test_simplex_product_family_invariants():
    F = simplex_product_family(10, 4, 2)
    assert F.model.t == (4, 8)
    assert F.model.monotone
    assert minimal_maslov(F.model) == 4
    assert F.diffeo_type == "S^3 x S^5 x T^2"
    assert F.index_threshold == 2 * (10 - 4) - 1


def test_simplex_product_gcd_example():
    F = simplex_product_family(14, 6, 0)
    assert minimal_maslov(F.model) == gcd(6, 8) == 2


def test_simplex_product_parity_gates_certificate_only():
    F = simplex_product_family(9, 4, 2)
    assert F.diffeo_type is None and not F.parity_ok
    assert F.model.monotone  # invariants never depend on parity


def test_simplex_product_range_errors():
    with pytest.raises(GateError):
        simplex_product_family(7, 4, 2)  # needs n >= 2p
    with pytest.raises(GateError):
        simplex_product_family(10, 4, 3)  # needs k < p - 1
    # n = 2p is the proposition's borderline case: buildable, flagged
    F = simplex_product_family(8, 4, 2, build=False)
    assert not F.strict_range
    assert simplex_product_family(10, 4, 2, build=False).strict_range


def test_stretched_family_members():
    F = stretched_family(1, 2)
    assert F.family == "trapezoid"
    assert F.model.t == (2, 4)
    assert not F.model.monotone
    assert F.diffeo_type == "T^4"

    F2 = stretched_family(2, 4)
    assert F2.family == "stretched"
    assert F2.model.t == (4, 12)
    assert F2.diffeo_type == "S^3 x S^3 x T^2"
    assert not F2.model.monotone

    F0 = stretched_family(1, 0)
    assert F0.model.monotone and F0.model.fano_C == pytest.approx(0.5)


def test_stretched_family_range_error():
    with pytest.raises(GateError):
        stretched_family(0, 2)


def test_disc_spectrum_rejects_unknown_family():
    import dataclasses

    F = dataclasses.replace(simplex_product_family(10, 4, 2, build=False), family="bogus")
    with pytest.raises(GateError, match="unsupported family"):
        disc_spectrum(F, 10)


def test_disc_spectrum_section4_frozen():
    F = simplex_product_family(10, 4, 2)
    spec = {(d.branch, d.lam1, d.lam2): d.index for d in disc_spectrum(F, 16)}
    assert spec[("A", 0, 0)] == 0
    assert spec[("A", 1, 0)] == 8
    assert spec[("A", 0, 1)] == 16
    assert spec[("B", 1, 0)] == 8
    assert spec[("B", 0, 1)] == 8
    assert spec[("B", 1, 1)] == 16
    assert all(v <= 16 for v in spec.values())


def test_disc_spectrum_boundary_classes():
    F = simplex_product_family(10, 4, 2)
    for d in disc_spectrum(F, 24):
        if d.branch == "A":
            assert d.boundary_class == (2 * d.lam1, 2 * d.lam2)
            assert d.generic_point
        else:
            assert d.boundary_class == (2 * d.lam1 - 2 * d.lam2, 2 * d.lam2)
            assert not d.generic_point
    F5 = stretched_family(2, 4)
    for d in disc_spectrum(F5, 0):
        if d.branch == "B":
            assert d.boundary_class == (2 * d.lam1 - 2 * F5.k * d.lam2, 2 * d.lam2)


def test_disc_spectrum_negative_indices_stretched():
    F = stretched_family(2, 4)
    spec = {(d.branch, d.lam1, d.lam2): d.index for d in disc_spectrum(F, 0)}
    assert spec[("B", 0, 1)] == 2 * 2 * (2 - 4)  # = -8
    assert spec[("A", 0, 0)] == 0
    # branch A has positive coefficients: nothing below zero
    assert all(b != "A" or i >= 0 for (b, _, _), i in [(k, v) for k, v in spec.items()])


def test_disc_spectrum_empty_below_zero_for_monotone_family():
    F = simplex_product_family(10, 4, 2)
    assert disc_spectrum(F, -1) == []


def test_disc_spectrum_sorted_and_deduplicated():
    F = stretched_family(2, 4)
    spec = disc_spectrum(F, 30)
    keys = [(d.branch, d.lam1, d.lam2) for d in spec]
    assert len(keys) == len(set(keys))
    assert [d.index for d in spec] == sorted(d.index for d in spec)


def test_branch_index_signs():
    # section-4 branch B coefficients stay nonnegative since n > 2p
    for n, p, k in [(10, 4, 0), (12, 4, 2), (14, 6, 4)]:
        F = simplex_product_family(n, p, k, build=False)
        assert F.branch_b[1] >= 0
    # stretched branch B goes negative exactly for k > 2
    assert stretched_family(2, 2, build=False).branch_b[1] == 0
    assert stretched_family(2, 3, build=False).branch_b[1] < 0
    assert stretched_family(2, 4, build=False).branch_b[1] < 0


def test_invariant_m_section4():
    F = simplex_product_family(10, 4, 2)
    rep = invariant_m(F)
    assert rep.m == 16 == rep.closed_form
    assert rep.witness_class == (0, 2)
    assert rep.witness_lambdas == (0, 1)
    assert invariant_m(simplex_product_family(14, 6, 2)).m == 20


def test_invariant_m_stretched():
    rep = invariant_m(stretched_family(2, 4))
    assert rep.m == 24 == rep.closed_form
    assert rep.witness_class == (0, 2)


def test_invariant_m_witness_is_doubled_primitive():
    for F in (simplex_product_family(12, 4, 1), stretched_family(3, 5)):
        rep = invariant_m(F)
        v1, v2 = rep.witness_class
        assert v1 % 2 == 0 and v2 % 2 == 0
        assert gcd(v1 // 2, v2 // 2) == 1
        assert rep.m > rep.threshold


def test_invariant_m_bound_autoexpansion():
    F = simplex_product_family(10, 4, 2)
    rep = invariant_m(F, index_bound=1)  # too small; expands to 2 * closed form
    assert rep.m == 16
    assert rep.bound_used == 32


def test_invariant_m_closed_form_sweep_section4():
    # enumeration equals 2(n - p + k) across the full parameter box
    for n in range(7, 31):
        for p in range(2, (n - 1) // 2 + 1):
            if n <= 2 * p:
                continue
            for k in range(0, p - 1):
                F = simplex_product_family(n, p, k, build=False)
                assert invariant_m(F).m == 2 * (n - p + k), (n, p, k)


def test_invariant_m_closed_form_sweep_stretched():
    # enumeration equals 2p(k + 2) for k >= 1; at k = 0 the (0, 1) class sits
    # exactly at the threshold and the minimum jumps to 8p
    for p in range(1, 5):
        for k in range(1, 11):
            F = stretched_family(p, k, build=False)
            assert invariant_m(F).m == 2 * p * (k + 2), (p, k)
        F0 = stretched_family(p, 0, build=False)
        assert invariant_m(F0).m == 8 * p


def test_section4_K_excludes_lambda2_zero():
    F = simplex_product_family(14, 6, 2)
    assert 2 * F.p <= F.index_threshold
    assert invariant_m(F).witness_lambdas[1] >= 1


def test_distinguish_section4_grid():
    models = [simplex_product_family(14, 6, k) for k in (0, 2, 4)]
    report = distinguish(models)
    assert report["class_count"] == 3 == models[0].p // 2
    assert [c["m"] for c in report["classes"]] == [16, 20, 24]


def test_distinguish_stretched_same_diffeo():
    models = [stretched_family(2, k) for k in (4, 6, 8)]
    report = distinguish(models)
    assert report["class_count"] == 3
    assert {c["diffeo_type"] for c in report["classes"]} == {"S^3 x S^3 x T^2"}
    assert [c["m"] for c in report["classes"]] == [24, 32, 40]
    assert len(report["same_diffeo_nonisotopic_pairs"]) == 3
    verdicts = {p["verdict"] for p in report["same_diffeo_nonisotopic_pairs"]}
    assert verdicts == {"smoothly identical-type, not Hamiltonian isotopic"}


def test_distinguish_single_and_order_invariance():
    single = distinguish([simplex_product_family(10, 4, 2)])
    assert single["class_count"] == 1
    models = [stretched_family(2, k) for k in (4, 6, 8)]
    a = distinguish(models)
    b = distinguish(list(reversed(models)))
    assert a["classes"] == b["classes"]


def test_distinguish_parameter_gates():
    with pytest.raises(GateError, match="identical"):
        distinguish([simplex_product_family(10, 4, 0), simplex_product_family(12, 4, 0)])
    with pytest.raises(GateError, match="mixed"):
        distinguish([simplex_product_family(10, 4, 0), stretched_family(2, 4)])


def test_smooth_isotopy_class_count():
    assert smooth_isotopy_class_count(stretched_family(2, 4)) == 4
    assert smooth_isotopy_class_count(simplex_product_family(12, 4, 2)) == 4
    with pytest.raises(GateError, match="H_1 unknown"):
        smooth_isotopy_class_count(simplex_product_family(9, 4, 2))
    with pytest.raises(GateError, match="H_1 unknown"):
        smooth_isotopy_class_count(stretched_family(1, 2))  # T^4: no sphere factors
