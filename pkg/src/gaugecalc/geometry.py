"""Vectors, subspaces, convex-set representations and Minkowski gauges.

Convex sets carry one of four representations (halfspaces, vertex hull,
sublevel set of a scalar function, or a raw membership oracle).  Gauges are
Minkowski functionals of a set translated so that its claimed center sits at
the origin; they are finite exactly on the linear span of the translated set
and vanish exactly on its lineality directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy.optimize import linprog

from .errors import (
    DimensionMismatchError,
    NonFiniteInputError,
    NotInSetError,
)

RANK_TOL = 1e-10
DEFAULT_TOL = 1e-9

#: step sizes used when shrinking a probe toward a point of the set
_SHRINK_FLOOR = 1e-12


def as_vector(x, dim: Optional[int] = None) -> np.ndarray:
    """Validate and convert ``x`` to a 1-D float array."""
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.ndim != 1:
        raise DimensionMismatchError(f"expected a vector, got shape {v.shape}")
    if dim is not None and v.size != dim:
        raise DimensionMismatchError(f"expected dimension {dim}, got {v.size}")
    if not np.all(np.isfinite(v)):
        raise NonFiniteInputError("vector has non-finite entries")
    return v


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of R^n given by an orthonormal row basis."""

    basis: np.ndarray  # shape (k, n), orthonormal rows; k may be 0
    ambient_dim: int

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=float).reshape(-1, self.ambient_dim)
        object.__setattr__(self, "basis", b)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(np.zeros((0, ambient_dim)), ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(np.eye(ambient_dim), ambient_dim)

    @classmethod
    def from_spanning(cls, vectors, ambient_dim: int, rank_tol: float = RANK_TOL) -> "Subspace":
        """Orthonormalize a (possibly redundant) spanning family via SVD."""
        arr = np.asarray(vectors, dtype=float).reshape(-1, ambient_dim)
        if arr.size == 0:
            return cls.zero(ambient_dim)
        norms = np.linalg.norm(arr, axis=1)
        arr = arr[norms > rank_tol]
        if arr.shape[0] == 0:
            return cls.zero(ambient_dim)
        u, s, vt = np.linalg.svd(arr, full_matrices=False)
        rank = int(np.sum(s > rank_tol * max(1.0, s[0])))
        return cls(vt[:rank], ambient_dim)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def project(self, x: np.ndarray) -> np.ndarray:
        if self.dim == 0:
            return np.zeros(self.ambient_dim)
        return self.basis.T @ (self.basis @ x)

    def residual(self, x: np.ndarray) -> float:
        return float(np.linalg.norm(x - self.project(x)))

    def contains(self, x: np.ndarray, tol: float = 1e-8) -> bool:
        return self.residual(x) <= tol * (1.0 + float(np.linalg.norm(x)))

    def intersect(self, other: "Subspace", rank_tol: float = RANK_TOL) -> "Subspace":
        """Intersection via the orthogonal complement of the union of complements."""
        comp = np.vstack([_complement_rows(self), _complement_rows(other)])
        if comp.shape[0] == 0:
            return Subspace.full(self.ambient_dim)
        null = _null_space(comp, rank_tol)
        return Subspace(null, self.ambient_dim)


def _complement_rows(s: Subspace) -> np.ndarray:
    """Orthonormal row basis of the orthogonal complement of ``s``."""
    n = s.ambient_dim
    if s.dim == 0:
        return np.eye(n)
    if s.dim == n:
        return np.zeros((0, n))
    u, sv, vt = np.linalg.svd(s.basis, full_matrices=True)
    return vt[s.dim:]


def _null_space(a: np.ndarray, rank_tol: float = RANK_TOL) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return np.eye(a.shape[1]) if a.ndim == 2 else np.zeros((0, 0))
    u, s, vt = np.linalg.svd(a, full_matrices=True)
    rank = int(np.sum(s > rank_tol * max(1.0, s[0] if s.size else 1.0)))
    return vt[rank:]


# ---------------------------------------------------------------------------
# Convex set representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Halfspaces:
    """Intersection of halfspaces ``normal . x <= offset``."""

    normals: np.ndarray  # (m, n)
    offsets: np.ndarray  # (m,)

    def __post_init__(self):
        object.__setattr__(self, "normals", np.asarray(self.normals, dtype=float))
        object.__setattr__(self, "offsets", np.asarray(self.offsets, dtype=float).ravel())


@dataclass(frozen=True)
class Vertices:
    """Convex hull of a finite point list; membership via linear feasibility."""

    points: np.ndarray  # (m, n)

    def __post_init__(self):
        object.__setattr__(self, "points", np.asarray(self.points, dtype=float))


@dataclass(frozen=True)
class Sublevel:
    """``{x in base_domain : fn(x) <= level}`` for a convex scalar function."""

    fn: Callable[[np.ndarray], float]
    level: float
    base_domain: "ConvexSet"


@dataclass(frozen=True)
class Oracle:
    """Raw membership callback; convexity is a caller contract.

    ``bounding_radius`` must enclose the set so ray searches terminate.
    """

    member: Callable[[np.ndarray], bool]
    bounding_radius: float


Representation = Union[Halfspaces, Vertices, Sublevel, Oracle]


@dataclass(frozen=True)
class ConvexSet:
    dim: int
    representation: Representation
    center: Optional[np.ndarray] = None  # claimed symmetry point

    def __post_init__(self):
        if self.center is not None:
            object.__setattr__(self, "center", as_vector(self.center, self.dim))

    # -- membership --------------------------------------------------------

    def contains(self, x, tol: float = DEFAULT_TOL) -> bool:
        x = as_vector(x, self.dim)
        r = self.representation
        if isinstance(r, Halfspaces):
            slack = r.offsets - r.normals @ x
            return bool(np.all(slack >= -tol * (1.0 + np.abs(r.offsets))))
        if isinstance(r, Vertices):
            return _hull_contains(r.points, x, tol)
        if isinstance(r, Sublevel):
            if not r.base_domain.contains(x, tol):
                return False
            val = float(r.fn(x))
            return val <= r.level + tol * (1.0 + abs(r.level))
        return bool(r.member(x))

    __contains__ = contains

    # -- anchors and sampling ----------------------------------------------

    def anchor(self) -> np.ndarray:
        """A member point used as the base for ray searches and sampling."""
        if self.center is not None:
            return self.center
        r = self.representation
        if isinstance(r, Vertices):
            return r.points.mean(axis=0)
        if isinstance(r, Halfspaces):
            return _chebyshev_center(r)
        if isinstance(r, Sublevel):
            cand = r.base_domain.anchor()
            if self.contains(cand):
                return cand
            for y in r.base_domain.sample_members(np.random.default_rng(0), 64):
                if self.contains(y):
                    return y
            raise NotInSetError("could not locate a member of the sublevel set")
        origin = np.zeros(self.dim)
        if self.contains(origin):
            return origin
        raise NotInSetError("oracle set without center: no anchor found")

    def sample_members(self, rng: np.random.Generator, n: int) -> list[np.ndarray]:
        """Draw ``n`` member points (not uniform; good span/extreme coverage)."""
        r = self.representation
        out: list[np.ndarray] = []
        if isinstance(r, Vertices):
            m = r.points.shape[0]
            for _ in range(n):
                w = rng.dirichlet(np.ones(m))
                out.append(r.points.T @ w)
            return out
        anchor = self.anchor()
        if isinstance(r, Halfspaces):
            slack0 = r.offsets - r.normals @ anchor
            for _ in range(n):
                d = rng.standard_normal(self.dim)
                nd = np.linalg.norm(d)
                if nd < 1e-14:
                    out.append(anchor.copy())
                    continue
                d /= nd
                rates = r.normals @ d
                with np.errstate(divide="ignore", invalid="ignore"):
                    steps = np.where(rates > 1e-14, slack0 / np.maximum(rates, 1e-300), np.inf)
                tmax = float(min(np.min(steps), 1e3))
                out.append(anchor + rng.uniform(0.0, 1.0) * max(tmax, 0.0) * d)
            return out
        if isinstance(r, Sublevel):
            base_pts = r.base_domain.sample_members(rng, n)
            for y in base_pts:
                out.append(self._pull_inside(anchor, y))
            return out
        # Oracle: rejection from the bounding ball, fall back to shrinking
        for _ in range(n):
            pt = None
            for _ in range(50):
                cand = anchor + r.bounding_radius * rng.standard_normal(self.dim) / math.sqrt(self.dim)
                if self.contains(cand):
                    pt = cand
                    break
            if pt is None:
                cand = anchor + r.bounding_radius * rng.standard_normal(self.dim) / math.sqrt(self.dim)
                pt = self._pull_inside(anchor, cand)
            out.append(pt)
        return out

    def _pull_inside(self, anchor: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Largest point of [anchor, y] still in the set, by bisection."""
        if self.contains(y):
            return y
        lo, hi = 0.0, 1.0
        for _ in range(40):
            mid = 0.5 * (lo + hi)
            if self.contains(anchor + mid * (y - anchor)):
                lo = mid
            else:
                hi = mid
        return anchor + lo * (y - anchor)

    def bounding_radius_estimate(self) -> float:
        r = self.representation
        if isinstance(r, Vertices):
            c = self.anchor()
            return 2.0 * float(np.max(np.linalg.norm(r.points - c, axis=1))) + 1.0
        if isinstance(r, Oracle):
            return r.bounding_radius
        if isinstance(r, Sublevel):
            return r.base_domain.bounding_radius_estimate()
        # halfspaces: probe max chord length from the anchor
        anchor = self.anchor()
        rng = np.random.default_rng(0)
        best = 1.0
        slack0 = r.offsets - r.normals @ anchor
        for _ in range(8 * self.dim):
            d = rng.standard_normal(self.dim)
            d /= max(np.linalg.norm(d), 1e-14)
            rates = r.normals @ d
            with np.errstate(divide="ignore", invalid="ignore"):
                steps = np.where(rates > 1e-14, slack0 / np.maximum(rates, 1e-300), np.inf)
            best = max(best, float(min(np.min(steps), 1e9)))
        return 2.0 * best


def _hull_contains(points: np.ndarray, x: np.ndarray, tol: float) -> bool:
    m = points.shape[0]
    if m == 1:
        return bool(np.linalg.norm(points[0] - x) <= tol * (1 + np.linalg.norm(x)))
    a_eq = np.vstack([points.T, np.ones((1, m))])
    b_eq = np.concatenate([x, [1.0]])
    res = linprog(np.zeros(m), A_eq=a_eq, b_eq=b_eq, bounds=[(0, None)] * m,
                  method="highs")
    return bool(res.status == 0)


def _chebyshev_center(r: Halfspaces) -> np.ndarray:
    m, n = r.normals.shape
    norms = np.linalg.norm(r.normals, axis=1)
    a_ub = np.hstack([r.normals, norms[:, None]])
    c = np.zeros(n + 1)
    c[-1] = -1.0
    bounds = [(-1e7, 1e7)] * n + [(0.0, 1e6)]
    res = linprog(c, A_ub=a_ub, b_ub=r.offsets, bounds=bounds, method="highs")
    if res.status != 0:
        raise NotInSetError("halfspace system has no interior point")
    return res.x[:n]


# ---------------------------------------------------------------------------
# Span, icr, symmetry
# ---------------------------------------------------------------------------


def span_of_difference(s: ConvexSet, base, samples: Optional[int] = None,
                       seed: int = 0) -> Subspace:
    """Orthonormal basis of span(S - base).

    Exact from the vertex list when available; otherwise probed from
    membership chords (coordinate directions plus random chords through
    sampled members).
    """
    base = as_vector(base, s.dim)
    if not s.contains(base):
        raise NotInSetError("base point is not a member of the set")
    r = s.representation
    if isinstance(r, Vertices):
        return Subspace.from_spanning(r.points - base, s.dim)
    if samples is None:
        samples = 4 * s.dim
    rng = np.random.default_rng(seed)
    dirs: list[np.ndarray] = []
    probes = [np.eye(s.dim)[i] * sgn for i in range(s.dim) for sgn in (+1.0, -1.0)]
    for d in probes:
        t = 1.0
        while t >= _SHRINK_FLOOR:
            if s.contains(base + t * d):
                dirs.append(d)
                break
            t *= 0.5
    for y in s.sample_members(rng, samples):
        dirs.append(y - base)
    return Subspace.from_spanning(dirs, s.dim)


def in_icr(s: ConvexSet, x, probe_dirs: int = 0) -> bool:
    """Relative-algebraic-interior test.

    Exact for halfspace and vertex representations; membership-sampled for
    sublevel and oracle sets (may report false positives on cusps).
    """
    x = as_vector(x, s.dim)
    if not s.contains(x):
        raise NotInSetError("point is not a member of the set")
    r = s.representation
    if isinstance(r, Vertices):
        return _vertex_relative_interior(r.points, x)
    span = span_of_difference(s, x, samples=max(probe_dirs, 4 * s.dim))
    if span.dim == 0:
        return True
    if isinstance(r, Halfspaces):
        slack = r.offsets - r.normals @ x
        active = slack <= 1e-9 * (1.0 + np.abs(r.offsets))
        if not np.any(active):
            return True
        a = r.normals[active]
        for b in span.basis:
            for d in (b, -b):
                if np.any(a @ d > 1e-9 * (1.0 + np.linalg.norm(a, axis=1))):
                    return False
        return True
    # sampled verdict for oracle-like representations
    for b in span.basis:
        for d in (b, -b):
            t = 1.0
            ok = False
            while t >= _SHRINK_FLOOR:
                if s.contains(x + t * d):
                    ok = True
                    break
                t *= 0.5
            if not ok:
                return False
    return True


def _vertex_relative_interior(points: np.ndarray, x: np.ndarray) -> bool:
    """x in ri(conv points) iff a representation with all weights > 0 exists."""
    m = points.shape[0]
    if m == 1:
        return bool(np.linalg.norm(points[0] - x) <= 1e-9 * (1 + np.linalg.norm(x)))
    # variables (lambda, t): maximize t subject to lambda_i >= t
    a_eq = np.hstack([np.vstack([points.T, np.ones((1, m))]), np.zeros((points.shape[1] + 1, 1))])
    b_eq = np.concatenate([x, [1.0]])
    a_ub = np.hstack([-np.eye(m), np.ones((m, 1))])
    c = np.zeros(m + 1)
    c[-1] = -1.0
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(m), A_eq=a_eq, b_eq=b_eq,
                  bounds=[(0, None)] * m + [(None, 1.0)], method="highs")
    if res.status != 0:
        raise NotInSetError("point is not in the hull (LP infeasible)")
    return bool(res.x[-1] > 1e-9)


def check_symmetry(s: ConvexSet, p, samples: int = 128, tol: float = 1e-8,
                   seed: int = 0) -> bool:
    """Is the set symmetric about ``p``?  Exact for halfspace/vertex
    representations, reflection-sampled otherwise."""
    p = as_vector(p, s.dim)
    if not s.contains(p):
        raise NotInSetError("claimed symmetry point is not in the set")
    r = s.representation
    if isinstance(r, Vertices):
        pts = np.unique(np.round(r.points, 10), axis=0)
        refl = 2.0 * p - pts
        return _point_sets_match(pts, refl, tol)
    if isinstance(r, Halfspaces):
        norms = np.linalg.norm(r.normals, axis=1)
        keep = norms > 1e-14
        a = r.normals[keep] / norms[keep, None]
        b = r.offsets[keep] / norms[keep]
        refl_a = -a
        refl_b = b - 2.0 * (a @ p)
        rows = np.hstack([a, b[:, None]])
        refl_rows = np.hstack([refl_a, refl_b[:, None]])
        return _point_sets_match(rows, refl_rows, tol)
    rng = np.random.default_rng(seed)
    for y in s.sample_members(rng, samples):
        if not s.contains(2.0 * p - y):
            return False
    return True


def _point_sets_match(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    if a.shape != b.shape:
        return False
    used = np.zeros(b.shape[0], dtype=bool)
    for row in a:
        dists = np.linalg.norm(b - row, axis=1)
        dists[used] = np.inf
        j = int(np.argmin(dists))
        if dists[j] > tol * (1.0 + np.linalg.norm(row)):
            return False
        used[j] = True
    return True


def spot_check_convexity(s: ConvexSet, rng: Optional[np.random.Generator] = None,
                         trials: int = 32) -> bool:
    """Random midpoint test for oracle-style sets (caller contract check)."""
    rng = rng or np.random.default_rng(0)
    pts = s.sample_members(rng, 2 * trials)
    for i in range(trials):
        u, v = pts[2 * i], pts[2 * i + 1]
        if not s.contains(0.5 * (u + v), tol=1e-7):
            return False
    return True


# ---------------------------------------------------------------------------
# Gauges
# ---------------------------------------------------------------------------


@dataclass
class Gauge:
    """Minkowski functional of ``set - center`` (or an explicit evaluator).

    ``kernel`` collects the two-sided zero-gauge directions (the lineality
    space of the translated set); ``span`` is where the gauge is finite.
    """

    span: Subspace
    kernel: Subspace
    set: Optional[ConvexSet] = None
    tol: float = DEFAULT_TOL
    fn: Optional[Callable[[np.ndarray], float]] = None

    @classmethod
    def of_set(cls, s: ConvexSet, tol: float = DEFAULT_TOL) -> "Gauge":
        if s.center is None:
            raise NotInSetError("gauge requires a set with a center point")
        span = span_of_difference(s, s.center)
        g = cls(span=span, kernel=Subspace.zero(s.dim), set=s, tol=tol)
        g.kernel = kernel_of_gauge(g)
        return g

    @classmethod
    def from_callable(cls, fn: Callable[[np.ndarray], float], span: Subspace,
                      kernel: Optional[Subspace] = None, tol: float = DEFAULT_TOL) -> "Gauge":
        return cls(span=span, kernel=kernel or Subspace.zero(span.ambient_dim),
                   set=None, tol=tol, fn=fn)

    def value(self, x) -> float:
        return minkowski_gauge(self, x)

    __call__ = value

    @property
    def dim(self) -> int:
        return self.span.ambient_dim


def minkowski_gauge(g: Gauge, x) -> float:
    """inf{t > 0 : x in t(S - p)}; +inf off the span, 0 on the kernel.

    Halfspace sets use the exact ratio formula; other representations are
    bracketed and bisected on the monotone membership predicate.
    """
    x = as_vector(x, g.dim)
    nx = float(np.linalg.norm(x))
    if nx == 0.0:
        return 0.0
    if g.fn is not None:
        if not g.span.contains(x, g.tol * 10):
            return math.inf
        return float(g.fn(x))
    s = g.set
    p = s.center
    r = s.representation
    if isinstance(r, Halfspaces):
        num = r.normals @ x
        den = r.offsets - r.normals @ p
        val = 0.0
        for ni, di, bi in zip(num, den, r.offsets):
            if ni <= g.tol * nx * 1e-3:
                continue
            if di <= g.tol * (1.0 + abs(bi)):
                return math.inf
            val = max(val, ni / di)
        return val
    if not g.span.contains(x, max(g.tol, 1e-8)):
        return math.inf
    if g.kernel.dim > 0 and g.kernel.contains(x, 1e-10):
        return 0.0

    def pred(t: float) -> bool:
        return s.contains(p + x / t)

    t = 1.0
    if pred(t):
        floor = g.tol * 1e-3
        while t > floor:
            if not pred(t * 0.5):
                break
            t *= 0.5
        else:
            return 0.0
        lo, hi = 0.5 * t, t
    else:
        ceil = 1e15
        while t < ceil:
            if pred(t * 2.0):
                break
            t *= 2.0
        else:
            return math.inf
        lo, hi = t, 2.0 * t
    while hi - lo > g.tol * hi:
        mid = 0.5 * (lo + hi)
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def kernel_of_gauge(g: Gauge, probe_radius: float = 1e8) -> Subspace:
    """Directions with gauge zero on both sides.

    Exact for halfspace sets (null space of the normals); large-radius
    membership probes over span basis directions and their pairwise
    combinations otherwise, with the rank cut via SVD.
    """
    if g.set is not None and isinstance(g.set.representation, Halfspaces):
        null = _null_space(g.set.representation.normals)
        if null.shape[0] == 0:
            return Subspace.zero(g.dim)
        # keep only the part inside the gauge span
        inside = [v for v in null if g.span.contains(v, 1e-8)]
        return Subspace.from_spanning(inside, g.dim)
    if g.set is None:
        return g.kernel
    s, p = g.set, g.set.center
    cands: list[np.ndarray] = []
    basis = g.span.basis
    probe_dirs: list[np.ndarray] = list(basis)
    # the probed span basis can come back in a rotated frame; include the
    # ambient axes (projected into the span) so axis-aligned lineality
    # directions are found
    for i in range(g.dim):
        a = g.span.project(np.eye(g.dim)[i])
        na = np.linalg.norm(a)
        if na > 1e-10:
            probe_dirs.append(a / na)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            probe_dirs.append((basis[i] + basis[j]) / math.sqrt(2))
            probe_dirs.append((basis[i] - basis[j]) / math.sqrt(2))
    for d in probe_dirs:
        if s.contains(p + probe_radius * d) and s.contains(p - probe_radius * d):
            cands.append(d)
    return Subspace.from_spanning(cands, g.dim)


# ---------------------------------------------------------------------------
# JSON serialization (schema fixed: dim / repr / center)
# ---------------------------------------------------------------------------


def set_to_json(s: ConvexSet) -> dict:
    r = s.representation
    if isinstance(r, Halfspaces):
        repr_doc = {"halfspaces": [{"normal": list(map(float, n)), "offset": float(b)}
                                   for n, b in zip(r.normals, r.offsets)]}
    elif isinstance(r, Vertices):
        repr_doc = {"vertices": [list(map(float, v)) for v in r.points]}
    elif isinstance(r, Sublevel):
        inner = {"level": float(r.level), "base_domain": set_to_json(r.base_domain)}
        name = getattr(r.fn, "source", None) or getattr(r.fn, "__name__", None)
        if name:
            inner["fn"] = name
        repr_doc = {"sublevel": inner}
    else:
        raise ValueError("oracle sets are not serializable")
    doc = {"dim": int(s.dim), "repr": repr_doc}
    if s.center is not None:
        doc["center"] = list(map(float, s.center))
    return doc


def set_from_json(doc: dict, fn_registry: Optional[dict] = None) -> ConvexSet:
    dim = int(doc["dim"])
    rd = doc["repr"]
    if "halfspaces" in rd:
        normals = np.array([h["normal"] for h in rd["halfspaces"]], dtype=float)
        offsets = np.array([h["offset"] for h in rd["halfspaces"]], dtype=float)
        rep: Representation = Halfspaces(normals, offsets)
    elif "vertices" in rd:
        rep = Vertices(np.array(rd["vertices"], dtype=float))
    elif "sublevel" in rd:
        sd = rd["sublevel"]
        base = set_from_json(sd["base_domain"], fn_registry)
        fn_name = sd["fn"]
        fn = None
        if fn_registry and fn_name in fn_registry:
            fn = fn_registry[fn_name]
        else:
            from .expr import parse, make_callable
            fn = make_callable(parse(fn_name, dim))
        rep = Sublevel(fn, float(sd["level"]), base)
    else:
        raise ValueError(f"unknown set representation keys: {sorted(rd)}")
    center = doc.get("center")
    return ConvexSet(dim, rep, None if center is None else np.asarray(center, dtype=float))


# -- convenience constructors used throughout tests and fixtures -----------


def box(dim: int, lo: float = -1.0, hi: float = 1.0,
        center: Optional[Sequence[float]] = None) -> ConvexSet:
    normals = np.vstack([np.eye(dim), -np.eye(dim)])
    offsets = np.concatenate([np.full(dim, hi), np.full(dim, -lo)])
    if center is None and abs(hi + lo) < 1e-15:
        center = np.zeros(dim)
    return ConvexSet(dim, Halfspaces(normals, offsets),
                     None if center is None else np.asarray(center, dtype=float))


def interval(lo: float, hi: float, center: Optional[float] = None) -> ConvexSet:
    """1-D interval; pass ``math.inf`` bounds for rays."""
    normals, offsets = [], []
    if math.isfinite(hi):
        normals.append([1.0])
        offsets.append(hi)
    if math.isfinite(lo):
        normals.append([-1.0])
        offsets.append(-lo)
    c = None
    if center is not None:
        c = np.array([float(center)])
    elif math.isfinite(lo) and math.isfinite(hi) and abs(hi + lo) < 1e-15:
        c = np.zeros(1)
    return ConvexSet(1, Halfspaces(np.array(normals), np.array(offsets)), c)
