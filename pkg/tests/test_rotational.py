import math

import pytest

from helpers import rel_dev
from rotsurf4.expr import Profile
from rotsurf4.geometry import RegularityError, Vec4, fd_jet2
from rotsurf4.octet import invariants_from_octet
from rotsurf4.rotational import (DegenerateCurveError,
                                 RotationalSurface, closed_forms_at,
                                 closed_invariants_at, closed_octet_at,
                                 curve_frenet_oracle, frames_at,
                                 meridian_curvature, vline_curvatures,
                                 vline_derivatives)

SQRT5 = math.sqrt(5.0)


# ---------------------------------------------------------------------------
# construction

def test_surface_rejects_equal_speeds():
    f, g = Profile.from_text("u"), Profile.from_text("u^2")
    with pytest.raises(ValueError):
        RotationalSurface(f, g, 1.0, 1.0)


def test_surface_rejects_nonpositive_speeds():
    f, g = Profile.from_text("u"), Profile.from_text("u^2")
    with pytest.raises(ValueError):
        RotationalSurface(f, g, 0.0, 1.0)
    with pytest.raises(ValueError):
        RotationalSurface(f, g, 1.0, -2.0)


# ---------------------------------------------------------------------------
# closed forms

def test_closed_forms_running_example(parabola):
    ff, ct, sf = closed_forms_at(parabola, 1.0)
    assert (ff.E, ff.F, ff.G) == (5.0, 0.0, 5.0)
    assert ct.c11_1 == pytest.approx(-2 / SQRT5, rel=1e-14)
    assert ct.c12_2 == pytest.approx(-2 / SQRT5, rel=1e-14)
    assert ct.c22_1 == pytest.approx(2 / SQRT5, rel=1e-14)
    assert (ct.c11_2, ct.c12_1, ct.c22_2) == (0.0, 0.0, 0.0)
    assert sf.L == pytest.approx(8 / 25, rel=1e-14)
    assert sf.M == 0.0
    assert sf.N == pytest.approx(8 / 25, rel=1e-14)


def test_closed_forms_flat_for_linear_meridian(linear):
    for u in (0.5, 1.0, 2.0):
        _, ct, sf = closed_forms_at(linear, u)
        assert ct.c12_2 == 0.0
        assert sf.L == 0.0 and sf.N == 0.0


def test_closed_forms_have_no_v_argument(parabola):
    import inspect
    for fn in (closed_forms_at, closed_invariants_at, closed_octet_at):
        assert "v" not in inspect.signature(fn).parameters


def test_closed_forms_regularity_error():
    s = RotationalSurface(Profile.from_text("u^2"), Profile.from_text("u^3"), 1.0, 2.0)
    with pytest.raises(RegularityError):
        closed_forms_at(s, 0.0)  # f' = g' = 0 there


# ---------------------------------------------------------------------------
# closed invariants

def test_closed_invariants_running_example(parabola):
    k, kappa, gauss = closed_invariants_at(parabola, 1.0)
    assert k == pytest.approx(64 / 15625, rel=1e-14)
    assert kappa == pytest.approx(8 / 125, rel=1e-14)
    assert gauss == pytest.approx(-8 / 125, rel=1e-14)


def test_closed_invariants_flat_family(linear):
    for u in (0.5, 1.0, 2.0):
        assert closed_invariants_at(linear, u) == (0.0, 0.0, 0.0)


def test_closed_invariants_swapped_speeds():
    s = RotationalSurface(Profile.from_text("u"), Profile.from_text("u^2"), 2.0, 1.0)
    k, _, _ = closed_invariants_at(s, 1.0)
    assert k == pytest.approx(-224 / 15625, rel=1e-14)


# ---------------------------------------------------------------------------
# closed octet

def test_closed_octet_running_example(parabola):
    o = closed_octet_at(parabola, 1.0)
    assert o.gamma1 == 0.0 and o.lam == 0.0 and o.beta1 == 0.0
    assert o.gamma2 == pytest.approx(-9 / (5 * SQRT5), rel=1e-14)
    assert o.nu1 == pytest.approx(-2 / (5 * SQRT5), rel=1e-14)
    assert o.nu2 == pytest.approx(2 / (5 * SQRT5), rel=1e-14)
    assert o.mu == pytest.approx(-2 / (5 * SQRT5), rel=1e-14)
    assert o.beta2 == pytest.approx(6 / 5, rel=1e-14)


def test_closed_octet_reproduces_closed_invariants(parabola, cubic):
    for s in (parabola, cubic):
        for u in (0.5, 1.0, 1.8):
            from_octet = invariants_from_octet(closed_octet_at(s, u))
            closed = closed_invariants_at(s, u)
            for a, b in zip(from_octet, closed):
                assert abs(a - b) <= 1e-14 * max(1.0, abs(a), abs(b))


def test_closed_octet_linear_meridian(linear):
    o = closed_octet_at(linear, 1.0)
    assert o.nu1 == 0.0 and o.mu == 0.0
    k, kappa, _ = invariants_from_octet(o)
    assert k == 0.0 and kappa == 0.0


# ---------------------------------------------------------------------------
# canonical frames

def test_frames_are_positively_oriented_orthonormal(parabola):
    from rotsurf4.geometry import det4, dot, norm
    for (u, v) in ((1.0, 0.0), (0.7, 2.2)):
        x, y, n1, n2 = frames_at(parabola, u, v)
        for w in (x, y, n1, n2):
            assert abs(norm(w) - 1.0) <= 1e-14
        pairs = ((x, y), (x, n1), (x, n2), (y, n1), (y, n2), (n1, n2))
        assert max(abs(dot(a, b)) for a, b in pairs) <= 1e-14
        assert det4(x, y, n1, n2) == pytest.approx(1.0, rel=1e-12)


# ---------------------------------------------------------------------------
# v-line curvatures

def test_vline_curvatures_example():
    cc = vline_curvatures(1.0, 1.0, 1.0, 2.0)
    assert cc.kappa == pytest.approx(math.sqrt(17 / 5), rel=1e-14)
    assert cc.tau == pytest.approx(-6 / math.sqrt(85), rel=1e-14)
    assert cc.sigma3 == pytest.approx(2 * math.sqrt(5) / math.sqrt(17), rel=1e-14)


def test_vline_equal_speeds_give_zero_torsion():
    # excluded from the surface family, checked for the formula in isolation
    assert vline_curvatures(1.0, 1.0, 2.0, 2.0).tau == 0.0


def test_vline_one_radius_zero():
    cc = vline_curvatures(0.0, 1.0, 1.0, 2.0)
    assert cc.kappa == pytest.approx(2.0, rel=1e-14)   # beta
    assert cc.tau == 0.0
    assert cc.sigma3 == pytest.approx(1.0, rel=1e-14)  # alpha


def test_vline_degenerate_rejected():
    with pytest.raises(RegularityError):
        vline_curvatures(0.0, 0.0, 1.0, 2.0)


# ---------------------------------------------------------------------------
# meridian curvature

def test_meridian_curvature_running_example(parabola):
    assert meridian_curvature(parabola, 1.0) == pytest.approx(2 / SQRT5 ** 3, rel=1e-14)


def test_meridian_curvature_linear_meridian(linear):
    assert meridian_curvature(linear, 1.0) == 0.0


def test_meridian_curvature_equals_abs_nu1(parabola, cubic):
    for s in (parabola, cubic):
        for u in (0.5, 1.0, 1.6):
            assert meridian_curvature(s, u) == pytest.approx(
                abs(closed_octet_at(s, u).nu1), rel=1e-14)


# ---------------------------------------------------------------------------
# Frenet oracle

def test_oracle_reproduces_vline_formulas():
    cc = curve_frenet_oracle(*vline_derivatives(1.0, 1.0, 1.0, 2.0, 0.0))
    formula = vline_curvatures(1.0, 1.0, 1.0, 2.0)
    assert abs(cc.kappa - formula.kappa) <= 1e-9
    assert abs(cc.tau - abs(formula.tau)) <= 1e-9
    assert abs(cc.sigma3 - abs(formula.sigma3)) <= 1e-9


def test_oracle_matches_formulas_for_general_radii():
    for (a, b, al, be) in ((1.0, 2.0, 1.0, 3.0), (0.5, 1.5, 2.0, 1.0), (2.0, 0.7, 3.0, 2.0)):
        cc = curve_frenet_oracle(*vline_derivatives(a, b, al, be, 0.3))
        formula = vline_curvatures(a, b, al, be)
        assert rel_dev(cc.kappa, formula.kappa) <= 1e-12
        assert rel_dev(cc.tau, abs(formula.tau)) <= 1e-12
        assert rel_dev(cc.sigma3, abs(formula.sigma3)) <= 1e-12


def test_oracle_planar_circle():
    derivs = vline_derivatives(1.0, 0.0, 1.0, 2.0, 0.0)
    cc = curve_frenet_oracle(*derivs)
    assert cc.kappa == pytest.approx(1.0, rel=1e-12)
    assert cc.tau == 0.0
    assert cc.sigma3 == 0.0


def test_oracle_curvatures_constant_along_vline():
    values = []
    for j in range(10):
        v = 2.0 * math.pi * j / 10
        cc = curve_frenet_oracle(*vline_derivatives(1.0, 1.0, 1.0, 2.0, v))
        values.append((cc.kappa, cc.tau, cc.sigma3))
    for idx in range(3):
        spread = max(v[idx] for v in values) - min(v[idx] for v in values)
        assert spread <= 1e-10


def test_oracle_zero_velocity_is_degenerate():
    zero = Vec4(0.0, 0.0, 0.0, 0.0)
    with pytest.raises(DegenerateCurveError) as err:
        curve_frenet_oracle(zero, Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0), Vec4(0, 0, 1, 0))
    assert err.value.rank == 0


# ---------------------------------------------------------------------------
# pipeline equivalence samples (the full sweep runs in the acceptance suite)

def test_pipeline_equivalence_spot_check(parabola):
    from rotsurf4.forms import first_form, lmn, second_tensor
    from rotsurf4.geometry import gram_schmidt_normals
    amap = parabola.as_map()
    u, v = 1.2, 0.4
    jet = fd_jet2(amap, u, v)
    ff = first_form(jet)
    e1, e2 = gram_schmidt_normals(jet)
    sf = lmn(second_tensor(jet, e1, e2), ff.W)
    ffc, _, sfc = closed_forms_at(parabola, u)
    assert rel_dev(ff.E, ffc.E) <= 1e-6
    assert rel_dev(ff.G, ffc.G) <= 1e-6
    assert rel_dev(sf.L, sfc.L) <= 1e-6
    assert rel_dev(sf.N, sfc.N) <= 1e-6


def test_ambient_mirror_flips_kappa_spot_check(parabola):
    from rotsurf4.forms import (first_form, gauss_curvature, invariants, lmn,
                                second_tensor)
    from rotsurf4.geometry import gram_schmidt_normals

    amap = parabola.as_map()

    def mirrored(u, v):
        p = amap(u, v)
        return Vec4(p.x1, p.x2, p.x3, -p.x4)

    def record(m, u, v):
        jet = fd_jet2(m, u, v)
        ff = first_form(jet)
        e1, e2 = gram_schmidt_normals(jet)
        ct = second_tensor(jet, e1, e2)
        return invariants(ff, lmn(ct, ff.W), gauss_curvature(ff, ct))

    a = record(amap, 1.0, 0.3)
    b = record(mirrored, 1.0, 0.3)
    assert abs(a.kappa + b.kappa) <= 1e-9
    assert abs(a.k - b.k) <= 1e-9
    assert abs(a.K - b.K) <= 1e-9
