"""Scalar function oracles on convex domains."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import expr as expr_mod
from .errors import NonFiniteInputError
from .geometry import ConvexSet, as_vector


@dataclass
class ScalarFunction:
    """An evaluation oracle on a declared convex domain.

    ``convex`` and ``lipschitz_const`` are caller-supplied knowledge flags;
    ``lipschitz_const`` is understood with respect to a named gauge.
    """

    fn: Callable[[np.ndarray], float]
    domain: ConvexSet
    convex: bool = False
    lipschitz_const: Optional[float] = None
    name: str = ""

    def __call__(self, x) -> float:
        val = float(self.fn(np.asarray(x, dtype=float)))
        if not np.isfinite(val):
            raise NonFiniteInputError(
                f"function {self.name or '<anonymous>'} returned {val} at {x}")
        return val

    @classmethod
    def from_expr(cls, source: str, domain: ConvexSet, convex: bool = False,
                  name: str = "") -> "ScalarFunction":
        ast = expr_mod.parse(source, domain.dim)
        return cls(fn=expr_mod.make_callable(ast), domain=domain, convex=convex,
                   name=name or source)


def check_midpoint_convexity(f: ScalarFunction, rng: Optional[np.random.Generator] = None,
                             trials: int = 32, tol: float = 1e-9) -> bool:
    """Sampled midpoint-convexity check backing the ``convex`` flag."""
    rng = rng or np.random.default_rng(0)
    pts = f.domain.sample_members(rng, 2 * trials)
    for i in range(trials):
        u, v = pts[2 * i], pts[2 * i + 1]
        mid = 0.5 * (u + v)
        if not f.domain.contains(mid):
            continue
        lhs = f(mid)
        rhs = 0.5 * (f(u) + f(v))
        if lhs > rhs + tol * (1.0 + abs(rhs)):
            return False
    return True


def sum_of(f: ScalarFunction, g: ScalarFunction, name: str = "") -> ScalarFunction:
    return ScalarFunction(fn=lambda x: f(x) + g(x), domain=f.domain,
                          convex=f.convex and g.convex, name=name or f"{f.name}+{g.name}")


def product_of(f: ScalarFunction, g: ScalarFunction, name: str = "") -> ScalarFunction:
    return ScalarFunction(fn=lambda x: f(x) * g(x), domain=f.domain, convex=False,
                          name=name or f"{f.name}*{g.name}")


def max_of(fs: list[ScalarFunction], name: str = "") -> ScalarFunction:
    return ScalarFunction(fn=lambda x: max(fi(x) for fi in fs), domain=fs[0].domain,
                          convex=all(fi.convex for fi in fs),
                          name=name or "max(" + ",".join(fi.name for fi in fs) + ")")
