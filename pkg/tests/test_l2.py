import math

import numpy as np
import pytest

from gaugecalc import (
    EXAMPLES,
    GridFunction,
    NonFiniteInputError,
    WeightedGrid,
    make_function,
    make_gauge,
    mu_l2,
    phi_l2,
    run_all,
    run_example,
    subdiff_l2,
)


@pytest.fixture(scope="module")
def grid():
    return WeightedGrid(1000)


def test_grid_invariants(grid):
    assert grid.nodes[0] == pytest.approx(0.0005)
    assert np.all(np.diff(grid.nodes) > 0)
    assert np.all(grid.nodes > 0)
    assert float(np.sum(grid.weights)) == pytest.approx(1.0, abs=1e-12)
    # midpoint rule is exact for affine integrands
    assert grid.inner(grid.nodes, np.ones(grid.n)) == pytest.approx(0.5, abs=1e-12)


def test_phi_zero_at_nodes(grid):
    assert phi_l2(grid, grid.nodes) == 0.0
    z = subdiff_l2(grid, grid.nodes)
    assert float(np.max(np.abs(z))) <= 1e-10


def test_phi_matches_integral(grid):
    # x(t) = t + t^2: integral of t^3 dt = 1/4, midpoint error O(n^-2)
    x = grid.nodes + grid.nodes ** 2
    assert phi_l2(grid, x) == pytest.approx(0.25, abs=1e-5)


def test_phi_infinite_below_floor(grid):
    x = grid.nodes.copy()
    x[3] = -1.5
    assert phi_l2(grid, x) == math.inf
    f = make_function(grid)
    with pytest.raises(NonFiniteInputError):
        f(x)


def test_mu_constant_field(grid):
    # integral of t^2 / t dt = 1/2 for v(t) = t (midpoint-exact: integrand t)
    assert mu_l2(grid, grid.nodes) == pytest.approx(math.sqrt(0.5), abs=1e-12)


def test_subdiff_representations(grid):
    x = grid.nodes + 0.5 * grid.nodes ** 2
    pairing = subdiff_l2(grid, x, representation="pairing")
    eucl = subdiff_l2(grid, x, representation="euclidean")
    assert np.allclose(eucl, grid.weights * pairing)
    assert np.allclose(pairing, grid.nodes)  # 2 (x - t)/t = t here
    with pytest.raises(ValueError):
        subdiff_l2(grid, x, representation="weird")


def test_pairing_is_the_weighted_gradient(grid):
    rng = np.random.default_rng(3)
    x = grid.nodes + 0.01 * rng.standard_normal(grid.n)
    a = subdiff_l2(grid, x, representation="pairing")
    v = rng.standard_normal(grid.n)
    h = 1e-6
    q = (phi_l2(grid, x + h * v) - phi_l2(grid, x - h * v)) / (2 * h)
    assert q == pytest.approx(grid.inner(a, v), rel=1e-6, abs=1e-8)


def test_make_gauge_norm(grid):
    g = make_gauge(grid)
    v = np.ones(grid.n)
    assert g.value(v) == pytest.approx(mu_l2(grid, v), abs=1e-9)
    assert g.value(2.5 * v) == pytest.approx(2.5 * mu_l2(grid, v), rel=1e-9)
    assert g.kernel.dim == 0


def test_grid_function_validation(grid):
    gf = GridFunction.from_callable(grid, lambda t: t ** 2)
    assert gf.values.shape == (grid.n,)
    with pytest.raises(ValueError):
        GridFunction(grid, np.zeros(3))


@pytest.mark.parametrize("name", EXAMPLES)
def test_worked_examples_pass(name):
    report = run_example(name, n=200)
    assert report["passed"], report


def test_inner_chain_rejects_shortcut():
    report = run_example("inner_chain", n=200)
    assert report["agrees_with"] == "pullback"
    assert report["shortcut_rel_error"] > 10 * report["tolerance"]


def test_run_all_keys():
    out = run_all(n=100)
    assert set(out) == set(EXAMPLES)
    assert all(r["passed"] for r in out.values())


def test_unknown_example_rejected():
    with pytest.raises(ValueError):
        run_example("nope", n=10)
