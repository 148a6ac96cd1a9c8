"""Subdifferential calculus rules as sampled inclusion verifiers.

Each verifier computes the left-hand subdifferential by extraction, builds
the right-hand side from the rule's combination formula, and compares the two
through their support functions on a direction fan.  A rule report states
whether the inclusion (and possibly equality) holds up to tolerance; both
sides are sampled polytopes, so the verdict is exact once the fan covers the
facet normals of either side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import ConditionViolationError, SamplingUnstableError
from .functions import ScalarFunction, max_of, product_of, sum_of
from .geometry import ConvexSet, Gauge, Oracle, Subspace, as_vector
from .subdiff import _direction_fan, _reduced_basis, subdifferential_hull

DEFAULT_RULE_TOL = 1e-4


@dataclass
class RuleReport:
    rule: str
    verdict: str  # "equality_holds" | "inclusion_holds" | "violated"
    max_inclusion_gap: float  # max over directions of h_lhs - h_rhs
    max_equality_gap: float   # max over directions of |h_lhs - h_rhs|
    tol: float
    num_directions: int
    details: dict

    @property
    def inclusion_holds(self) -> bool:
        return self.verdict in ("equality_holds", "inclusion_holds")

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "verdict": self.verdict,
            "max_inclusion_gap": float(self.max_inclusion_gap),
            "max_equality_gap": float(self.max_equality_gap),
            "tol": float(self.tol),
            "num_directions": int(self.num_directions),
            "details": self.details,
        }


# ---------------------------------------------------------------------------
# support-function machinery
# ---------------------------------------------------------------------------


def _support(vertices: Sequence[np.ndarray], v: np.ndarray) -> float:
    return max(float(v @ z) for z in vertices)


def _scaled_support(vertices: Sequence[np.ndarray], v: np.ndarray, c: float) -> float:
    """Support function of c * conv(vertices); negative c reflects the set."""
    if c >= 0.0:
        return c * _support(vertices, v)
    return (-c) * _support(vertices, -v)


def _compare(rule: str, lhs_vertices, rhs_support: Callable[[np.ndarray], float],
             dirs: Sequence[np.ndarray], tol: float, details: dict) -> RuleReport:
    gap_in = -math.inf
    gap_eq = -math.inf
    scale = 1.0
    for v in dirs:
        hl = _support(lhs_vertices, v)
        hr = rhs_support(v)
        gap_in = max(gap_in, hl - hr)
        gap_eq = max(gap_eq, abs(hl - hr))
        scale = max(scale, abs(hl), abs(hr))
    if gap_in <= tol * scale and gap_eq <= tol * scale:
        verdict = "equality_holds"
    elif gap_in <= tol * scale:
        verdict = "inclusion_holds"
    else:
        verdict = "violated"
    return RuleReport(rule=rule, verdict=verdict, max_inclusion_gap=float(gap_in),
                      max_equality_gap=float(gap_eq), tol=tol,
                      num_directions=len(dirs), details=details)


def _fan_for(g: Gauge, seed: int = 42, count: Optional[int] = None) -> list[np.ndarray]:
    w = _reduced_basis(g)
    rng = np.random.default_rng(seed)
    if count is None:
        count = max(6 * w.dim, 24)
    dirs = _direction_fan(w, rng, count)
    for i in range(w.dim):
        for j in range(i + 1, w.dim):
            for s in (1.0, -1.0):
                d = (w.basis[i] + s * w.basis[j]) / math.sqrt(2.0)
                dirs.append(d)
                dirs.append(-d)
    return dirs


def _sum_gauge(g1: Gauge, g2: Gauge) -> Gauge:
    span = g1.span.intersect(g2.span)
    kernel = g1.kernel.intersect(g2.kernel)
    return Gauge.from_callable(lambda v: g1.value(v) + g2.value(v), span,
                               kernel=kernel)


def _product_gauge(g1: Gauge, g2: Gauge) -> Gauge:
    """Gauge on the product space: max of the factor gauges."""
    n1, n2 = g1.dim, g2.dim
    n = n1 + n2

    def embed(basis: np.ndarray, offset: int, width: int) -> np.ndarray:
        out = np.zeros((basis.shape[0], n))
        out[:, offset:offset + width] = basis
        return out

    span = Subspace.from_spanning(
        np.vstack([embed(g1.span.basis, 0, n1), embed(g2.span.basis, n1, n2)]), n)
    kernel = Subspace.from_spanning(
        np.vstack([embed(g1.kernel.basis, 0, n1), embed(g2.kernel.basis, n1, n2)]), n)

    def fn(v):
        v = np.asarray(v, dtype=float)
        return max(g1.value(v[:n1]), g2.value(v[n1:]))

    return Gauge.from_callable(fn, span, kernel=kernel)


# ---------------------------------------------------------------------------
# the rules
# ---------------------------------------------------------------------------


def verify_sum_rule(f: ScalarFunction, g: ScalarFunction, x, gauge_f: Gauge,
                    gauge_g: Optional[Gauge] = None, tol: float = DEFAULT_RULE_TOL,
                    seed: int = 42) -> RuleReport:
    """Subdifferential of f + g against the Minkowski sum of the factors.

    The combined gauge is the sum of the factor gauges (finite where both
    are, vanishing where both vanish).
    """
    x = as_vector(x, f.domain.dim)
    gauge_g = gauge_g or gauge_f
    combined = _sum_gauge(gauge_f, gauge_g) if gauge_g is not gauge_f else gauge_f
    total = sum_of(f, g)
    lhs = subdifferential_hull(total, x, combined, seed=seed).subgradients
    part_f = subdifferential_hull(f, x, gauge_f, seed=seed).subgradients
    part_g = subdifferential_hull(g, x, gauge_g, seed=seed).subgradients

    def rhs(v):
        return _support(part_f, v) + _support(part_g, v)

    dirs = _fan_for(combined, seed=seed)
    return _compare("sum", lhs, rhs, dirs, tol,
                    {"x": list(map(float, x)),
                     "lhs_vertices": [list(map(float, z)) for z in lhs]})


def verify_product_rule(f: ScalarFunction, g: ScalarFunction, x, gauge: Gauge,
                        tol: float = DEFAULT_RULE_TOL, seed: int = 42) -> RuleReport:
    """Subdifferential of f * g against f(x) dg + g(x) df.

    Negative factor values reflect the scaled summand, which the support
    combination below accounts for.
    """
    x = as_vector(x, f.domain.dim)
    prod = product_of(f, g)
    lhs = subdifferential_hull(prod, x, gauge, seed=seed).subgradients
    part_f = subdifferential_hull(f, x, gauge, seed=seed).subgradients
    part_g = subdifferential_hull(g, x, gauge, seed=seed).subgradients
    fx, gx = f(x), g(x)

    def rhs(v):
        return _scaled_support(part_g, v, fx) + _scaled_support(part_f, v, gx)

    dirs = _fan_for(gauge, seed=seed)
    return _compare("product", lhs, rhs, dirs, tol,
                    {"x": list(map(float, x)), "f_at_x": fx, "g_at_x": gx})


def _outer_derivative_range(g: Callable[[float], float], u0: float,
                            convex: bool) -> tuple[float, float]:
    """Interval hull of the derivative values of a scalar outer function near
    u0, via central differences at shrinking scales with stability check."""
    if convex:
        # one-sided slopes of a convex scalar function bracket its
        # subdifferential interval exactly
        lo = hi = None
        for k in range(8, 24):
            t = 2.0 ** (-k)
            right = (g(u0 + t) - g(u0)) / t
            left = (g(u0) - g(u0 - t)) / t
            lo, hi = left, right
        return min(lo, hi), max(lo, hi)
    samples = []
    scales = [1e-3 * 2.0 ** (-k) for k in range(6)]
    for t in scales:
        for off in (-2.0, -1.0, 0.0, 1.0, 2.0):
            u = u0 + off * t
            samples.append((g(u + t) - g(u - t)) / (2.0 * t))
    tail = sorted(samples[-10:])
    head = sorted(samples[:10])
    if abs(min(tail) - min(head)) > 1e-2 * (1 + abs(min(tail))) and \
            abs(max(tail) - max(head)) > 1e-2 * (1 + abs(max(tail))):
        raise SamplingUnstableError(
            "derivative samples of the outer function do not stabilize")
    return min(samples), max(samples)


def verify_chain_rule_2(g: Callable[[float], float], h: ScalarFunction, x,
                        gauge: Gauge, outer_convex: bool = True,
                        composite_convex: bool = False,
                        tol: float = DEFAULT_RULE_TOL, seed: int = 42) -> RuleReport:
    """Scalar post-composition: d(g o h)(x) against [dg(h(x))] * dh(x).

    The outer multiplier interval comes from difference-quotient sampling of
    g around h(x); scaling a set by a negative multiplier reflects it.
    """
    x = as_vector(x, h.domain.dim)
    comp = ScalarFunction(fn=lambda v: float(g(h(v))), domain=h.domain,
                          convex=composite_convex, name=f"outer({h.name})")
    lhs = subdifferential_hull(comp, x, gauge, seed=seed).subgradients
    inner = subdifferential_hull(h, x, gauge, seed=seed).subgradients
    u0 = h(x)
    a_lo, a_hi = _outer_derivative_range(g, u0, outer_convex)

    def rhs(v):
        return max(_scaled_support(inner, v, a) for a in (a_lo, a_hi))

    dirs = _fan_for(gauge, seed=seed)
    return _compare("chain2", lhs, rhs, dirs, tol,
                    {"x": list(map(float, x)), "inner_value": float(u0),
                     "outer_slope_range": [float(a_lo), float(a_hi)]})


@dataclass
class InnerMap:
    """A differentiable map used as the inner factor of a pre-composition."""

    fn: Callable[[np.ndarray], np.ndarray]
    jacobian: Callable[[np.ndarray], np.ndarray]  # (out_dim, in_dim)
    in_dim: int
    out_dim: int
    name: str = ""

    def __call__(self, x) -> np.ndarray:
        return np.asarray(self.fn(as_vector(x, self.in_dim)), dtype=float)


def check_domination(inner: InnerMap, x, gauge_out: Gauge, gauge_in: Gauge,
                     radius: float = 0.1, pairs: int = 64, seed: int = 42,
                     tol: float = 1e-6) -> None:
    """Sampled check that the inner map contracts the gauges near x:
    mu(g(u) - g(w)) <= p(u - w).  Raises with the witness pair on failure."""
    x = as_vector(x, inner.in_dim)
    rng = np.random.default_rng(seed)
    for _ in range(pairs):
        u = x + radius * rng.standard_normal(inner.in_dim)
        w = x + radius * rng.standard_normal(inner.in_dim)
        lhs = gauge_out.value(inner(u) - inner(w))
        rhs = gauge_in.value(u - w)
        if not math.isfinite(rhs):
            continue
        if lhs > rhs * (1.0 + tol) + tol:
            raise ConditionViolationError(
                f"gauge of the image difference ({lhs:.6g}) exceeds the gauge of "
                f"the argument difference ({rhs:.6g})", witness=(u, w))


def verify_chain_rule_1(f: ScalarFunction, inner: InnerMap, x, gauge_out: Gauge,
                        gauge_in: Gauge, domain_x: Optional[ConvexSet] = None,
                        composite_convex: bool = False,
                        check_condition: bool = True,
                        tol: float = DEFAULT_RULE_TOL, seed: int = 42) -> RuleReport:
    """Pre-composition with a smooth map: d(f o g)(x) against
    {J(x)^T zeta : zeta in df(g(x))}.

    Requires the gauge-domination hypothesis on the inner map, checked by
    sampling when ``check_condition`` is set.
    """
    x = as_vector(x, inner.in_dim)
    if check_condition:
        check_domination(inner, x, gauge_out, gauge_in, seed=seed)
    if domain_x is None:
        radius = 10.0 * (1.0 + float(np.linalg.norm(x)))
        domain_x = ConvexSet(inner.in_dim,
                             Oracle(member=lambda v: True, bounding_radius=radius),
                             center=x)
    comp = ScalarFunction(fn=lambda v: f(inner(v)), domain=domain_x,
                          convex=composite_convex, name=f"{f.name}({inner.name})")
    lhs = subdifferential_hull(comp, x, gauge_in, seed=seed).subgradients
    outer = subdifferential_hull(f, inner(x), gauge_out, seed=seed).subgradients
    jac = np.asarray(inner.jacobian(x), dtype=float)
    rhs_vertices = [jac.T @ z for z in outer]

    def rhs(v):
        return _support(rhs_vertices, v)

    dirs = _fan_for(gauge_in, seed=seed)
    return _compare("chain1", lhs, rhs, dirs, tol,
                    {"x": list(map(float, x)),
                     "rhs_vertices": [list(map(float, z)) for z in rhs_vertices]})


def verify_max_rule(fs: Sequence[ScalarFunction], x, gauge: Gauge,
                    tol: float = DEFAULT_RULE_TOL, seed: int = 42,
                    active_tol: float = 1e-9) -> RuleReport:
    """Pointwise max: d(max f_i)(x) against the hull of the active pieces."""
    x = as_vector(x, fs[0].domain.dim)
    top = max_of(list(fs))
    lhs = subdifferential_hull(top, x, gauge, seed=seed).subgradients
    vals = [fi(x) for fi in fs]
    peak = max(vals)
    active = [i for i, v in enumerate(vals) if v >= peak - active_tol * (1 + abs(peak))]
    rhs_vertices: list[np.ndarray] = []
    for i in active:
        rhs_vertices.extend(subdifferential_hull(fs[i], x, gauge, seed=seed).subgradients)

    def rhs(v):
        return _support(rhs_vertices, v)

    dirs = _fan_for(gauge, seed=seed)
    return _compare("max", lhs, rhs, dirs, tol,
                    {"x": list(map(float, x)), "active_indices": active,
                     "values": [float(v) for v in vals]})


def verify_partial_rule(f: ScalarFunction, x, gauge_1: Gauge, gauge_2: Gauge,
                        tol: float = DEFAULT_RULE_TOL, seed: int = 42) -> RuleReport:
    """Joint subdifferential against the product of the partial ones.

    The product-space gauge is the max of the factor gauges; the right-hand
    side is the Cartesian product of the partial subdifferentials at the
    frozen complementary block.
    """
    n1, n2 = gauge_1.dim, gauge_2.dim
    x = as_vector(x, n1 + n2)
    x1, x2 = x[:n1], x[n1:]
    prod_gauge = _product_gauge(gauge_1, gauge_2)
    lhs = subdifferential_hull(f, x, prod_gauge, seed=seed).subgradients

    def freeze_second(v1):
        return f(np.concatenate([np.atleast_1d(v1), x2]))

    def freeze_first(v2):
        return f(np.concatenate([x1, np.atleast_1d(v2)]))

    radius = 10.0 * (1.0 + float(np.linalg.norm(x)))
    dom1 = ConvexSet(n1, Oracle(member=lambda v: f.domain.contains(
        np.concatenate([np.atleast_1d(v), x2])), bounding_radius=radius), center=x1)
    dom2 = ConvexSet(n2, Oracle(member=lambda v: f.domain.contains(
        np.concatenate([x1, np.atleast_1d(v)])), bounding_radius=radius), center=x2)
    f1 = ScalarFunction(fn=freeze_second, domain=dom1, convex=f.convex,
                        name=f"{f.name}|block1")
    f2 = ScalarFunction(fn=freeze_first, domain=dom2, convex=f.convex,
                        name=f"{f.name}|block2")
    part1 = subdifferential_hull(f1, x1, gauge_1, seed=seed).subgradients
    part2 = subdifferential_hull(f2, x2, gauge_2, seed=seed).subgradients

    def rhs(v):
        return _support(part1, v[:n1]) + _support(part2, v[n1:])

    dirs = _fan_for(prod_gauge, seed=seed)
    return _compare("partial", lhs, rhs, dirs, tol,
                    {"x": list(map(float, x)),
                     "block_dims": [int(n1), int(n2)]})
