"""Regularized normalized Laplacians of geometric graphs.

The regularizer adds weight alpha/n between every ordered pair of nodes,
including i = j, so entry (i, j) is

    delta_ij - (adj_ij + alpha/n) / sqrt((deg_i + alpha) (deg_j + alpha)),

and the diagonal is 1 - (alpha/n) / (deg_i + alpha).  Including the
diagonal term is what makes the closed-form grid spectrum exact; many
conventions omit it, this one does not.  For a regular grid graph every
denominator equals degree + alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularityError
from .graphs import GeometricGraph


@dataclass(frozen=True)
class RegNormLaplacian:
    """Symmetric dense operator together with its construction context."""

    n: int
    alpha: float
    matrix: np.ndarray
    source_kind: str  # "rgg" or "dgg"

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (self.n, self.n):
            raise ValueError(f"matrix must be {self.n}x{self.n}")
        if np.max(np.abs(m - m.T), initial=0.0) > 1e-14:
            raise ValueError("matrix must be symmetric to 1e-14")
        object.__setattr__(self, "matrix", m)


def _adjacency_matrix(g: GeometricGraph) -> np.ndarray:
    A = np.zeros((g.n, g.n))
    for i, nbrs in enumerate(g.adjacency):
        A[i, nbrs] = 1.0
    return A


def _assemble(g: GeometricGraph, alpha: float, denom_degrees: np.ndarray) -> np.ndarray:
    n = g.n
    A = _adjacency_matrix(g)
    inv_sqrt = 1.0 / np.sqrt(denom_degrees + alpha)
    M = (A + alpha / n) * np.outer(inv_sqrt, inv_sqrt)
    L = np.eye(n) - M
    return (L + L.T) / 2.0  # exact symmetry despite rounding


def assemble_rgg_laplacian(g: GeometricGraph, alpha: float) -> RegNormLaplacian:
    """Laplacian normalized by the observed degrees, regularized by alpha."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if alpha == 0 and np.any(g.degrees == 0):
        raise SingularityError(
            "alpha = 0 requires minimum degree >= 1 (isolated vertex present)")
    L = _assemble(g, alpha, g.degrees.astype(float))
    return RegNormLaplacian(n=g.n, alpha=alpha, matrix=L, source_kind=g.kind)


def assemble_dgg_laplacian(g: GeometricGraph, alpha: float) -> RegNormLaplacian:
    """Laplacian of a regular grid graph; all denominators are degree + alpha."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    degree = int(g.degrees[0]) if g.n else 0
    if np.any(g.degrees != degree):
        raise ValueError("grid Laplacian requires a regular graph")
    if alpha == 0 and degree == 0:
        raise SingularityError("alpha = 0 requires minimum degree >= 1")
    L = _assemble(g, alpha, np.full(g.n, float(degree)))
    return RegNormLaplacian(n=g.n, alpha=alpha, matrix=L, source_kind=g.kind)


def write_matrix_dump(L: RegNormLaplacian, path) -> None:
    """Plain-text dump, one row per line, 17 significant digits."""
    with open(path, "w") as fh:
        for row in L.matrix:
            fh.write(" ".join("%.17g" % v for v in row) + "\n")
