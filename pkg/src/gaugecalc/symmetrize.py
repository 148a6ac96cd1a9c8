"""Sublevel sets and their symmetric cores.

Given a convex function on a convex set and a base point, the sublevel set at
a level above the base value is symmetrized by intersecting it with its own
reflection through the base point.  The resulting core is convex, symmetric
about the base point, and spans the same subspace as the sublevel set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import EmptySublevelError, NotInSetError
from .functions import ScalarFunction
from .geometry import (
    ConvexSet,
    Halfspaces,
    Oracle,
    Sublevel,
    as_vector,
    check_symmetry,
    in_icr,
    span_of_difference,
)


@dataclass
class SublevelCore:
    s_a: ConvexSet          # sublevel set
    c_a: ConvexSet          # symmetric core, centered at x0
    x0: np.ndarray
    level: float
    source: ScalarFunction

    def to_json(self) -> dict:
        return {
            "fn": self.source.name,
            "x0": list(map(float, self.x0)),
            "level": float(self.level),
        }


def sublevel_set(f: ScalarFunction, domain: ConvexSet, level: float,
                 probes: int = 64, seed: int = 0) -> ConvexSet:
    """``{x in domain : f(x) <= level}`` as a sublevel-representation set."""
    rng = np.random.default_rng(seed)
    candidates = domain.sample_members(rng, probes)
    try:
        candidates.append(domain.anchor())
    except NotInSetError:
        pass
    feasible = [x for x in candidates if f(x) <= level + 1e-12 * (1 + abs(level))]
    if not feasible:
        raise EmptySublevelError(
            f"level {level} lies below the function value at every probe point")
    best = min(feasible, key=f)
    return ConvexSet(domain.dim, Sublevel(fn=f, level=level, base_domain=domain),
                     center=best)


def symmetric_core(s_a: ConvexSet, x0) -> ConvexSet:
    """The intersection of the sublevel set with its reflection through x0.

    Convex, symmetric about x0, contains x0, and preserves the span of the
    sublevel set.  Halfspace sets stay halfspace sets; everything else
    becomes a membership oracle.
    """
    x0 = as_vector(x0, s_a.dim)
    if not s_a.contains(x0):
        raise NotInSetError("base point is not in the sublevel set")
    rep = s_a.representation
    if isinstance(rep, Halfspaces):
        refl_normals = -rep.normals
        refl_offsets = rep.offsets - 2.0 * (rep.normals @ x0)
        return ConvexSet(
            s_a.dim,
            Halfspaces(np.vstack([rep.normals, refl_normals]),
                       np.concatenate([rep.offsets, refl_offsets])),
            center=x0)
    radius = s_a.bounding_radius_estimate()

    def member(x):
        return s_a.contains(x) and s_a.contains(2.0 * x0 - x)

    return ConvexSet(s_a.dim, Oracle(member=member, bounding_radius=radius), center=x0)


def literal_ca_member(s_a: ConvexSet, x0, x,
                      alpha_grid: Optional[Sequence[float]] = None) -> bool:
    """Per-point scaled-reflection membership predicate.

    True iff some alpha in the grid keeps both the alpha-scaled point and its
    alpha-scaled reflection inside the sublevel set.  Kept alongside
    :func:`symmetric_core` so the two symmetrization readings can be compared;
    on asymmetric sets this predicate does not describe a symmetric set.
    """
    x0 = as_vector(x0, s_a.dim)
    x = as_vector(x, s_a.dim)
    if not s_a.contains(x):
        raise NotInSetError("probe point is not in the sublevel set")
    if alpha_grid is None:
        alpha_grid = [2.0 ** (-k) for k in range(21)]
    d = x - x0
    for alpha in alpha_grid:
        if s_a.contains(x0 + alpha * d) and s_a.contains(x0 - alpha * d):
            return True
    return False


def build_core(f: ScalarFunction, domain: ConvexSet, x0,
               level: Optional[float] = None) -> SublevelCore:
    """Construct the sublevel set and its symmetric core about ``x0``.

    The default level is f(x0) + 1, which keeps the sublevel set
    full-dimensional in generic cases.
    """
    x0 = as_vector(x0, domain.dim)
    if level is None:
        level = f(x0) + 1.0
    if f(x0) > level + 1e-12 * (1 + abs(level)):
        raise EmptySublevelError("level is below the function value at x0")
    s_a = sublevel_set(f, domain, level)
    c_a = symmetric_core(s_a, x0)
    return SublevelCore(s_a=s_a, c_a=c_a, x0=x0, level=float(level), source=f)


def verify_span_equality(core: SublevelCore, tol: float = 1e-8) -> bool:
    """Do the core and the sublevel set span the same subspace?"""
    span_s = span_of_difference(core.s_a, core.x0)
    span_c = span_of_difference(core.c_a, core.x0)
    if span_s.dim != span_c.dim:
        return False
    for b in span_s.basis:
        if span_c.residual(b) > tol:
            return False
    for b in span_c.basis:
        if span_s.residual(b) > tol:
            return False
    return True


def verify_icr_membership(core: SublevelCore) -> bool:
    """Is the base point in the relative algebraic interior of the sublevel set?"""
    return in_icr(core.s_a, core.x0)


def core_is_symmetric(core: SublevelCore) -> bool:
    return check_symmetry(core.c_a, core.x0)
