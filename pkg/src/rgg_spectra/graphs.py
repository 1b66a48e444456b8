"""Random and deterministic geometric graphs on the torus.

Random geometric graphs (RGGs) connect sampled points whose lp torus
distance is at most the connection radius; deterministic geometric graphs
(DGGs) do the same on the regular N^d lattice.  Neighbor search uses a
cell list with periodic wraparound, falling back to all-pairs when the
radius is too large for at least three cells per axis.
"""

from __future__ import annotations

import io
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .torus import INF, MAX_RADIUS, MetricSpec, TorusPointSet, grid_side


@dataclass(frozen=True)
class GeometricGraph:
    """Undirected simple graph with its construction parameters."""

    kind: str  # "rgg" or "dgg"
    n: int
    dim: int
    p: float
    radius: float
    adjacency: tuple  # per-node sorted int arrays
    degrees: np.ndarray
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ("rgg", "dgg"):
            raise ValueError(f"kind must be 'rgg' or 'dgg', got {self.kind!r}")
        if len(self.adjacency) != self.n or len(self.degrees) != self.n:
            raise ValueError("adjacency and degrees must have length n")

    def edges(self) -> np.ndarray:
        """All edges as an (m, 2) array with i < j, sorted lexicographically."""
        out = [(i, j) for i in range(self.n) for j in self.adjacency[i] if i < j]
        return np.array(out, dtype=np.int64).reshape(-1, 2)

    def mean_degree(self) -> float:
        return float(np.mean(self.degrees))


def _adjacency_from_pairs(n: int, pairs_i: np.ndarray, pairs_j: np.ndarray):
    """Build per-node sorted neighbor arrays from undirected pair lists."""
    src = np.concatenate([pairs_i, pairs_j])
    dst = np.concatenate([pairs_j, pairs_i])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    counts = np.bincount(src, minlength=n)
    splits = np.cumsum(counts)[:-1]
    adjacency = tuple(np.array(a, dtype=np.int64) for a in np.split(dst, splits))
    return adjacency, counts.astype(np.int64)


def _pairs_within(pts: np.ndarray, idx_a, idx_b, radius: float, p: float):
    """Indices (into idx_a/idx_b) of cross pairs at torus distance <= radius."""
    delta = np.abs(pts[idx_a][:, None, :] - pts[idx_b][None, :, :])
    delta = np.minimum(delta, 1.0 - delta)
    if p == INF:
        dist = delta.max(axis=2)
    else:
        dist = (delta ** p).sum(axis=2) ** (1.0 / p)
    return np.nonzero(dist <= radius)


def _build_rgg_allpairs(points: TorusPointSet, radius: float, metric: MetricSpec):
    pts = points.points
    n = points.n
    ii, jj = _pairs_within(pts, np.arange(n), np.arange(n), radius, metric.p)
    keep = ii < jj
    return ii[keep], jj[keep]


def _build_rgg_cells(points: TorusPointSet, radius: float, metric: MetricSpec,
                     cells_per_axis: int):
    pts = points.points
    d = points.dim
    m = cells_per_axis
    cell_of = np.minimum((pts * m).astype(np.int64), m - 1)
    keys = np.ravel_multi_index(cell_of.T, (m,) * d)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    uniq, starts = np.unique(sorted_keys, return_index=True)
    buckets = {int(k): order[s:e] for k, s, e in
               zip(uniq, starts, np.append(starts[1:], len(order)))}

    # forward offsets: first nonzero component +1, so each cell pair is
    # visited exactly once even with wraparound (offsets distinct mod m >= 3)
    forward = []
    for off in itertools.product((-1, 0, 1), repeat=d):
        nz = next((c for c in off if c != 0), 0)
        if nz == 1:
            forward.append(off)

    shape = (m,) * d
    pairs_i, pairs_j = [], []
    for key, members in buckets.items():
        coords = np.unravel_index(key, shape)
        ii, jj = _pairs_within(pts, members, members, radius, metric.p)
        keep = ii < jj
        pairs_i.append(members[ii[keep]])
        pairs_j.append(members[jj[keep]])
        for off in forward:
            nb_key = int(np.ravel_multi_index(
                tuple((c + o) % m for c, o in zip(coords, off)), shape))
            other = buckets.get(nb_key)
            if other is None:
                continue
            ii, jj = _pairs_within(pts, members, other, radius, metric.p)
            pairs_i.append(members[ii])
            pairs_j.append(other[jj])
    return np.concatenate(pairs_i), np.concatenate(pairs_j)


def build_rgg(points: TorusPointSet, radius: float,
              metric: MetricSpec = MetricSpec()) -> GeometricGraph:
    """Connect every pair of points at lp torus distance <= radius.

    Ties at exactly the radius connect; there is no epsilon slack.
    """
    if not (0.0 < radius < MAX_RADIUS):
        raise ValueError(f"radius must lie in (0, 0.5), got {radius}")
    cells = int(1.0 / radius)
    if cells >= 3:
        pi, pj = _build_rgg_cells(points, radius, metric, cells)
    else:
        pi, pj = _build_rgg_allpairs(points, radius, metric)
    adjacency, degrees = _adjacency_from_pairs(points.n, pi, pj)
    return GeometricGraph(kind="rgg", n=points.n, dim=points.dim, p=metric.p,
                          radius=radius, adjacency=adjacency, degrees=degrees,
                          seed=points.seed)


def build_dgg(n: int, d: int, radius: float,
              metric: MetricSpec = MetricSpec()) -> GeometricGraph:
    """Geometric graph on the N^d lattice, N = n^(1/d).

    Vertex-transitive: every node sees the same offset stencil.  Under the
    Chebyshev metric each degree equals (2*floor(N*radius)+1)^d - 1.
    """
    if not (0.0 < radius < MAX_RADIUS):
        raise ValueError(f"radius must lie in (0, 0.5), got {radius}")
    N = grid_side(n, d)
    K = int(N * radius)  # radius < 0.5 guarantees 2K+1 <= N
    offsets = []
    for off in itertools.product(range(-K, K + 1), repeat=d):
        if all(c == 0 for c in off):
            continue
        delta = np.abs(np.array(off, dtype=float)) / N
        delta = np.minimum(delta, 1.0 - delta)
        dist = delta.max() if metric.p == INF else (delta ** metric.p).sum() ** (1.0 / metric.p)
        if dist <= radius:
            offsets.append(off)
    offsets = np.array(offsets, dtype=np.int64).reshape(-1, d)

    coords = np.indices((N,) * d).reshape(d, -1).T  # row-major lattice order
    strides = N ** np.arange(d - 1, -1, -1, dtype=np.int64)
    neighbor_ids = ((coords[:, None, :] + offsets[None, :, :]) % N) @ strides
    neighbor_ids = np.sort(neighbor_ids, axis=1)
    adjacency = tuple(neighbor_ids)
    degrees = np.full(n, offsets.shape[0], dtype=np.int64)
    return GeometricGraph(kind="dgg", n=n, dim=d, p=metric.p, radius=radius,
                          adjacency=adjacency, degrees=degrees, seed=None)


def dgg_degree(gamma: float, d: int) -> int:
    """Grid degree matched to mean degree gamma: (2*floor(gamma^(1/d))+1)^d - 1."""
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    k = math.floor(gamma ** (1.0 / d))
    return (2 * k + 1) ** d - 1


def dgg_radius(k: int, N: int) -> float:
    """Canonical tie-free radius selecting exactly k lattice steps per side.

    Falls to (k+0.25)/N when 2k+1 = N so the radius stays below 0.5.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if 2 * k + 1 > N:
        raise ValueError(f"stencil 2k+1 = {2*k+1} exceeds grid side N = {N}")
    if 2 * k + 1 < N:
        return (k + 0.5) / N
    return (k + 0.25) / N


def dgg_for_gamma(gamma: float, N: int, d: int) -> GeometricGraph:
    """Chebyshev DGG whose degree is dgg_degree(gamma, d)."""
    k = math.floor(gamma ** (1.0 / d))
    return build_dgg(N ** d, d, dgg_radius(k, N), MetricSpec(INF))


def write_graph_csv(g: GeometricGraph, path) -> None:
    """Header `kind,n,dim,p,radius,seed`, then one `i,j` line per edge (i<j)."""
    p_str = "inf" if g.p == INF else "%.17g" % g.p
    seed_str = "" if g.seed is None else str(g.seed)
    with open(path, "w") as fh:
        fh.write(f"{g.kind},{g.n},{g.dim},{p_str},{'%.17g' % g.radius},{seed_str}\n")
        for i, j in g.edges():
            fh.write(f"{i},{j}\n")


def read_graph_csv(path) -> GeometricGraph:
    with open(path) as fh:
        kind, n, dim, p_str, radius, seed_str = fh.readline().strip().split(",")
        n, dim = int(n), int(dim)
        p = INF if p_str == "inf" else float(p_str)
        seed = int(seed_str) if seed_str else None
        body = fh.read()
    if body.strip():
        rows = np.loadtxt(io.StringIO(body), delimiter=",", dtype=np.int64, ndmin=2)
        pi, pj = rows[:, 0], rows[:, 1]
    else:
        pi = pj = np.array([], dtype=np.int64)
    adjacency, degrees = _adjacency_from_pairs(n, pi, pj)
    return GeometricGraph(kind=kind, n=n, dim=dim, p=p, radius=float(radius),
                          adjacency=adjacency, degrees=degrees, seed=seed)
