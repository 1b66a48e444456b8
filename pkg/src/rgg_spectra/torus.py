"""Points on the d-dimensional unit torus and lp geometry helpers.

Coordinates live in [0, 1)^d with periodic wraparound: the distance between
two coordinates along one axis is min(|dx|, 1 - |dx|).  Connection radii for
the constant-mean-degree regime are obtained by inverting the lp ball volume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import RegimeError

INF = math.inf

# Beyond this radius an lp ball wraps onto itself and the volume formula
# (and every neighbor-search shortcut) stops being valid.
MAX_RADIUS = 0.5


def _check_p(p: float) -> float:
    p = float(p)
    if not (p >= 1.0):
        raise ValueError(f"lp exponent must satisfy p >= 1, got {p}")
    return p


@dataclass(frozen=True)
class MetricSpec:
    """The lp metric used for distances; p = math.inf selects Chebyshev."""

    p: float = INF

    def __post_init__(self):
        object.__setattr__(self, "p", _check_p(self.p))


@dataclass(frozen=True)
class TorusPointSet:
    """n points on the torus, each row of `points` one coordinate vector."""

    dim: int
    points: np.ndarray  # shape (n, dim), each entry in [0, 1)
    seed: int | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != self.dim:
            raise ValueError(f"points must have shape (n, {self.dim})")
        if pts.shape[0] < 1:
            raise ValueError("point set must contain at least one point")
        if np.any(pts < 0.0) or np.any(pts >= 1.0):
            raise ValueError("coordinates must lie in [0, 1)")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class RegimeParams:
    """Constant-mean-degree parameters and the radius they induce."""

    gamma: float
    n: int
    d: int
    radius: float = field(init=False)
    metric: MetricSpec = MetricSpec()

    def __post_init__(self):
        r = radius_for_gamma(self.gamma, self.n, self.d, self.metric)
        object.__setattr__(self, "radius", r)


def wrapped_deltas(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Per-coordinate torus differences min(|dx|, 1 - |dx|)."""
    delta = np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))
    return np.minimum(delta, 1.0 - delta)


def torus_distance(a, b, metric: MetricSpec = MetricSpec()) -> float:
    """lp distance between two points of the unit torus."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    delta = wrapped_deltas(a, b)
    if metric.p == INF:
        return float(np.max(delta))
    return float(np.sum(delta ** metric.p) ** (1.0 / metric.p))


def ball_volume(radius: float, d: int, metric: MetricSpec = MetricSpec()) -> float:
    """Volume of the lp ball of the given radius in R^d.

    General formula (2r)^d Gamma(1 + 1/p)^d / Gamma(1 + d/p); for p = inf it
    reduces to (2r)^d, for p = 2 to the usual hypersphere volume.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if metric.p == INF:
        return (2.0 * radius) ** d
    p = metric.p
    return (2.0 * radius) ** d * math.gamma(1.0 + 1.0 / p) ** d / math.gamma(1.0 + d / p)


def radius_for_gamma(gamma: float, n: int, d: int,
                     metric: MetricSpec = MetricSpec()) -> float:
    """Radius r with (lp ball volume of r) * n = gamma.

    Raises RegimeError when the solution reaches 0.5, i.e. gamma is too
    large for this n in the constant-degree regime.
    """
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    if n <= 1:
        raise ValueError("n must be at least 2")
    if gamma >= n:
        raise ValueError(f"gamma must be below n, got gamma={gamma}, n={n}")
    # vol(r) = c * (2r)^d  =>  r = (gamma / (c n))^(1/d) / 2
    unit = ball_volume(0.5, d, metric)  # volume at r = 1/2, i.e. c in c*(2r)^d
    radius = 0.5 * (gamma / (unit * n)) ** (1.0 / d)
    if radius >= MAX_RADIUS:
        raise RegimeError(
            f"radius {radius:.6g} >= 0.5; gamma={gamma} too large for n={n}")
    return radius


def sample_uniform_points(n: int, d: int, seed) -> TorusPointSet:
    """n i.i.d. uniform points; identical seed gives bit-identical output."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if d < 1:
        raise ValueError("d must be at least 1")
    rng = np.random.default_rng(seed)
    pts = rng.random((n, d))
    scalar_seed = seed if isinstance(seed, int) else None
    return TorusPointSet(dim=d, points=pts, seed=scalar_seed)


def grid_side(n: int, d: int) -> int:
    """N with N^d = n exactly, or a ValueError."""
    N = round(n ** (1.0 / d))
    # guard against float roots like 3.9999
    for cand in (N, N - 1, N + 1):
        if cand > 0 and cand ** d == n:
            return cand
    raise ValueError(f"n={n} is not a perfect {d}-th power")


def grid_points(n: int, d: int) -> TorusPointSet:
    """The N^d lattice {0, 1/N, ..., (N-1)/N}^d in row-major order."""
    N = grid_side(n, d)
    axis = np.arange(N) / N
    mesh = np.meshgrid(*([axis] * d), indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    return TorusPointSet(dim=d, points=pts, seed=None)


def write_points_csv(ps: TorusPointSet, path) -> None:
    """Serialize: header `dim,n`, then one d-column row per point."""
    with open(path, "w") as fh:
        fh.write(f"{ps.dim},{ps.n}\n")
        for row in ps.points:
            fh.write(",".join("%.17g" % c for c in row) + "\n")


def read_points_csv(path) -> TorusPointSet:
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        dim, n = int(header[0]), int(header[1])
        pts = np.loadtxt(fh, delimiter=",", ndmin=2)
    if pts.shape != (n, dim):
        raise ValueError(f"expected {n} rows of {dim} coordinates in {path}")
    return TorusPointSet(dim=dim, points=pts, seed=None)
