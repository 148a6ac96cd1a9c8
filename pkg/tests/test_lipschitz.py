import math

import numpy as np
import pytest

from gaugecalc import (
    AsymmetricSetError,
    Gauge,
    KernelViolationError,
    NotInSetError,
    ScalarFunction,
    box,
    build_core,
    counterexample_suite,
    empirical_constant,
    interval,
    local_witness,
    scale_about,
    theoretical_constant,
)
from gaugecalc.geometry import ConvexSet, Halfspaces, Vertices


def paraboloid(dom):
    terms = " + ".join(f"x{i + 1}^2" for i in range(dom.dim))
    return ScalarFunction.from_expr(terms, domain=dom, convex=True)


def test_certificate_on_unit_box():
    dom = box(2, -5, 5, center=[0, 0])
    f = paraboloid(dom)
    corners = [[1, 1], [1, -1], [-1, 1], [-1, -1]]
    cert = theoretical_constant(f, box(2), [0, 0], 0.5, extra_points=corners,
                                pairs=400)
    assert cert.M == pytest.approx(2.0, abs=1e-12)  # sup of x^2+y^2 at a corner
    assert cert.theoretical_L == pytest.approx(2.0 * 1.5 / 0.5, abs=1e-9)
    assert cert.empirical_L <= cert.theoretical_L * (1 + 1e-6)
    assert cert.empirical_L > 0.0
    doc = cert.to_json()
    assert set(doc) == {"theoretical_L", "empirical_L", "M", "epsilon", "pairs", "seed"}


def test_epsilon_range_validated():
    dom = box(1, -5, 5, center=[0])
    f = paraboloid(dom)
    for bad in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(ValueError):
            theoretical_constant(f, box(1), [0], bad)


def test_asymmetric_set_rejected():
    dom = box(1, -5, 5, center=[0])
    f = paraboloid(dom)
    with pytest.raises(AsymmetricSetError):
        theoretical_constant(f, interval(-1.0, 2.0, center=0.0), [0.0], 0.5)


def test_empirical_constant_linear_function_exact():
    # |u - v| / |u - v| = 1 for every sampled pair
    dom = box(1, -5, 5, center=[0])
    f = ScalarFunction.from_expr("x1", domain=dom, convex=True)
    g = Gauge.of_set(interval(-1.0, 1.0))
    est = empirical_constant(f, g, interval(-0.5, 0.5), pairs=200, seed=1)
    assert est == pytest.approx(1.0, abs=1e-12)


def test_empirical_constant_flags_kernel_violation():
    strip = ConvexSet(2, Halfspaces(np.array([[1.0, 0.0], [-1.0, 0.0]]),
                                    np.array([1.0, 1.0])), center=np.zeros(2))
    g = Gauge.of_set(strip)
    dom = box(2, -5, 5, center=[0, 0])
    f = ScalarFunction.from_expr("x2", domain=dom, convex=True)  # varies along kernel
    with pytest.raises(KernelViolationError):
        empirical_constant(f, g, box(2, -0.5, 0.5, center=[0, 0]), pairs=200)


def test_scale_about_halfspaces_and_vertices():
    half = scale_about(box(2), [0.0, 0.0], 0.5)
    assert half.contains([0.49, 0.0]) and not half.contains([0.51, 0.0])
    tri = ConvexSet(2, Vertices(np.array([[0.0, 0], [2.0, 0], [0, 2.0]])),
                    center=np.array([0.5, 0.5]))
    moved = scale_about(tri, [0.0, 0.0], 0.5, translate_to=[1.0, 1.0])
    assert np.allclose(np.sort(moved.representation.points, axis=0),
                       np.sort(np.array([[1.0, 1.0], [2.0, 1.0], [1.0, 2.0]]), axis=0))


def test_local_witness_certifies_lipschitz_ball():
    dom = box(2, -4, 4, center=[0, 0])
    f = paraboloid(dom)
    core = build_core(f, dom, [0.5, 0.0])
    x = np.array([0.8, 0.1])
    w = local_witness(f, core, x, 0.5)
    assert 0.0 < w.lam < 1.0
    assert w.L > 0.0
    # witness region: lam * (C - x0) + x must lie in the domain and carry the
    # Lipschitz inequality for the original gauge
    region = scale_about(core.c_a, core.x0, w.lam, translate_to=x)
    g = Gauge.of_set(ConvexSet(core.c_a.dim, core.c_a.representation, core.x0))
    rng = np.random.default_rng(0)
    pts = region.sample_members(rng, 40)
    for p in pts:
        assert dom.contains(p, tol=1e-7)
    for i in range(0, 38, 2):
        u, v = pts[i], pts[i + 1]
        mu = g.value(u - v)
        if mu > 1e-12 and math.isfinite(mu):
            assert abs(f(u) - f(v)) <= w.L * mu * (1 + 1e-6) + 1e-9


def test_local_witness_requires_interior_point():
    dom = box(2, -4, 4, center=[0, 0])
    f = paraboloid(dom)
    core = build_core(f, dom, [0.5, 0.0])
    with pytest.raises(NotInSetError):
        local_witness(f, core, [4.0, 0.0], 0.5)


def test_counterexample_suite_reproduces_all_sections():
    report = counterexample_suite()
    assert set(report) == {"sqrt_boundary", "floor_quasiconvex", "asymmetric_set"}
    assert all(section["reproduced"] for section in report.values())
    # frozen anchor values
    assert report["floor_quasiconvex"]["bound"] == pytest.approx(19.0, abs=1e-9)
    assert report["sqrt_boundary"]["probes"][0]["quotient"] == pytest.approx(2.0)
    assert report["asymmetric_set"]["gauge_on_ray"] == pytest.approx(0.0, abs=1e-8)
    assert report["asymmetric_set"]["gauge_negative_side"] == pytest.approx(1.0, abs=1e-8)
