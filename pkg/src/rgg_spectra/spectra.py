"""Numerical spectra, empirical spectral distributions, and Levy distances.

The empirical spectral distribution (ESD) of an operator places mass 1/n at
each eigenvalue; its CDF uses the strict-inequality convention
F(x) = #{lambda_i < x} / n and is therefore left-continuous.  The Levy
distance between two ESDs is the smallest band width epsilon such that each
CDF stays inside the other's epsilon-band in both axes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapacityError
from .graphs import GeometricGraph, dgg_degree, dgg_for_gamma
from .laplacian import RegNormLaplacian, assemble_dgg_laplacian, assemble_rgg_laplacian
from .torus import MetricSpec, grid_side, radius_for_gamma, sample_uniform_points
from .graphs import build_rgg

DENSE_CAP = 8192  # largest order we will hand to the dense eigensolver


@dataclass(frozen=True)
class SpectralDistribution:
    """All n eigenvalues, ascending."""

    eigenvalues: np.ndarray
    n: int

    def __post_init__(self):
        ev = np.sort(np.asarray(self.eigenvalues, dtype=float).ravel())
        if ev.size != self.n or self.n < 1:
            raise ValueError("eigenvalue count must equal n >= 1")
        object.__setattr__(self, "eigenvalues", ev)

    @classmethod
    def from_values(cls, values) -> "SpectralDistribution":
        arr = np.asarray(values, dtype=float).ravel()
        return cls(eigenvalues=arr, n=arr.size)


@dataclass(frozen=True)
class LevyResult:
    distance: float
    cube: float
    bound: float | None = None
    threshold: float | None = None


def esd_cdf(sd: SpectralDistribution, x, side: str = "left") -> np.ndarray:
    """F(x) = #{lambda < x}/n; side='right' evaluates the right limit F(x+)."""
    return np.searchsorted(sd.eigenvalues, np.asarray(x, dtype=float),
                           side=side) / sd.n


def full_spectrum(L: RegNormLaplacian) -> SpectralDistribution:
    """Dense symmetric eigensolve of the whole operator."""
    if L.n > DENSE_CAP:
        raise CapacityError(
            f"n = {L.n} exceeds dense cap {DENSE_CAP}; use the closed-form "
            "grid spectrum for larger grids")
    ev = np.linalg.eigvalsh(L.matrix)
    return SpectralDistribution.from_values(ev)


def spectrum_of_graph(g: GeometricGraph, alpha: float) -> SpectralDistribution:
    """Assemble the regularized Laplacian of g and eigensolve it."""
    if g.n > DENSE_CAP:
        raise CapacityError(
            f"n = {g.n} exceeds dense cap {DENSE_CAP}; use the closed-form "
            "grid spectrum for larger grids")
    if g.kind == "dgg":
        L = assemble_dgg_laplacian(g, alpha)
    else:
        L = assemble_rgg_laplacian(g, alpha)
    return full_spectrum(L)


def _band_feasible(ea: np.ndarray, eb: np.ndarray, eps: float,
                   slack: float = 1e-15) -> bool:
    """Whether each ESD stays within the eps band of the other everywhere.

    The band condition F(x-eps)-eps <= G(x) <= F(x+eps)+eps for all real x is
    symmetric in (F, G).  Both one-sided limits are checked at every jump of
    either CDF (shifted by +-eps for F), which covers all of R because the
    CDFs are piecewise constant.
    """
    na, nb = ea.size, eb.size
    crit = np.concatenate([eb, ea - eps, ea + eps])
    for side in ("left", "right"):
        F = np.searchsorted(ea, crit - eps, side=side) / na
        G = np.searchsorted(eb, crit, side=side) / nb
        if np.any(F - eps - G > slack):
            return False
        F = np.searchsorted(ea, crit + eps, side=side) / na
        if np.any(G - F - eps > slack):
            return False
    return True


def levy_distance(fa: SpectralDistribution, fb: SpectralDistribution,
                  tol: float = 1e-9) -> LevyResult:
    """Levy distance by bisection on the band width.

    Feasibility of a band width is monotone, so bisection over [0, 1] is
    exact up to the requested tolerance.
    """
    ea, eb = fa.eigenvalues, fb.eigenvalues
    if _band_feasible(ea, eb, 0.0):
        return LevyResult(distance=0.0, cube=0.0)
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _band_feasible(ea, eb, mid):
            hi = mid
        else:
            lo = mid
    return LevyResult(distance=hi, cube=hi ** 3)


def trace_bound(a: RegNormLaplacian, b: RegNormLaplacian) -> float:
    """(1/n) trace((A-B)^2), the cube bound on the Levy distance."""
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    diff = a.matrix - b.matrix
    return float(np.sum(diff * diff)) / a.n


def lemma2_threshold(gamma: float, gamma_prime: float, alpha: float) -> float:
    """max(4 gamma'/(gamma'+alpha)^2, 8 gamma/(gamma+alpha)^2)."""
    if gamma <= 0 or gamma_prime <= 0:
        raise ValueError("gamma and gamma_prime must be positive")
    return max(4.0 * gamma_prime / (gamma_prime + alpha) ** 2,
               8.0 * gamma / (gamma + alpha) ** 2)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    seed: int
    gamma: float
    gamma_prime: int
    alpha: float
    levy: float
    levy_cubed: float
    threshold: float
    exceeds: int


def convergence_study(d: int, gamma: float, alpha: float,
                      metric: MetricSpec, n_list: Sequence[int],
                      seeds: Sequence[int]) -> list[ConvergenceRow]:
    """Levy distance between RGG and grid ESDs at matched gamma, per trial.

    For each (n, seed): sample an RGG at the radius solving the mean-degree
    equation, take the grid graph whose degree is dgg_degree(gamma, d) on
    the same n, and compare the two regularized spectra.  Trials draw from
    independent streams keyed by (seed, n).  The grid spectrum is reused
    across seeds since it does not depend on them.
    """
    gp = dgg_degree(gamma, d)
    thr = lemma2_threshold(gamma, gp, alpha)
    rows = []
    for n in n_list:
        N = grid_side(n, d)
        dgg = dgg_for_gamma(gamma, N, d)
        sd_dgg = spectrum_of_graph(dgg, alpha)
        radius = radius_for_gamma(gamma, n, d, metric)
        for seed in seeds:
            pts = sample_uniform_points(n, d, [seed, n])
            g = build_rgg(pts, radius, metric)
            sd_rgg = spectrum_of_graph(g, alpha)
            res = levy_distance(sd_rgg, sd_dgg)
            rows.append(ConvergenceRow(
                n=n, seed=int(seed), gamma=gamma, gamma_prime=gp, alpha=alpha,
                levy=res.distance, levy_cubed=res.cube, threshold=thr,
                exceeds=int(res.cube > thr)))
    return rows
