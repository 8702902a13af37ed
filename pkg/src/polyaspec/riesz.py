"""Riesz means and the classical eigenvalue inequality zoo.

Margins are reported as (satisfied side) - (other side), so a nonnegative
margin means the inequality holds.  The one-term Berezin (Dirichlet) and
Laptev (Neumann) bounds are theorems for gamma >= 1 on true spectra; a
negative margin there indicates an implementation bug, not a discovery.
The two-term refinements hold only beyond a non-constructive onset, so the
scan reports the empirical onset instead of asserting them globally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .constants import l_gamma_d, omega_d
from .errors import ConfigError, CoverageError, DomainError, ModeError
from .spectra import BoundaryCondition, DomainMeta, EigenvalueStream

__all__ = [
    "riesz_mean",
    "riesz_mean_many",
    "berezin_margin",
    "laptev_neumann_margin",
    "li_yau_checks",
    "kroger_check",
    "two_term_riesz_scan",
    "TwoTermScan",
    "window_infimum_dirichlet",
    "window_infimum_neumann",
    "window_supremum_neumann",
    "WindowScan",
]

_CHUNK = 512


def riesz_mean(s: EigenvalueStream, gamma: float, lam: float) -> float:
    """sum of mult * (lam - value)^gamma over values strictly below lam.

    gamma = 0 recovers the counting function.
    """
    if gamma < 0:
        raise DomainError(f"gamma must be >= 0, got {gamma}")
    if lam > s.cutoff:
        raise CoverageError(f"lambda={lam} exceeds stream cutoff {s.cutoff}")
    idx = np.searchsorted(s.values, lam, side="left")
    if idx == 0:
        return 0.0
    gaps = lam - s.values[:idx]
    return float(np.sum(s.multiplicities[:idx] * gaps ** gamma))


def riesz_mean_many(s: EigenvalueStream, gamma: float, lams: Sequence[float]) -> np.ndarray:
    """Vectorized riesz_mean over many lambda values (chunked)."""
    if gamma < 0:
        raise DomainError(f"gamma must be >= 0, got {gamma}")
    lams = np.asarray(lams, float)
    if lams.size and lams.max() > s.cutoff:
        raise CoverageError(f"lambda={lams.max()} exceeds stream cutoff {s.cutoff}")
    out = np.empty(lams.size, float)
    mults = s.multiplicities.astype(float)
    for start in range(0, lams.size, _CHUNK):
        block = lams[start:start + _CHUNK]
        gaps = np.maximum(block[:, None] - s.values[None, :], 0.0)
        out[start:start + _CHUNK] = (gaps ** gamma * (gaps > 0)) @ mults if gamma == 0 \
            else (gaps ** gamma) @ mults
    return out


def _one_term_bound(meta: DomainMeta, gamma: float, lam: float) -> float:
    return l_gamma_d(gamma, meta.dimension) * meta.volume * lam ** (gamma + meta.dimension / 2.0)


def _require_gamma_ge_1(gamma: float) -> None:
    if gamma < 1:
        raise DomainError(f"this bound requires gamma >= 1, got {gamma}")


def _require_bc(meta: DomainMeta, bc: BoundaryCondition, what: str) -> None:
    if meta.bc is not bc:
        raise ModeError(f"{what} applies to {bc.value} spectra, got {meta.bc.value}")


def berezin_margin(s: EigenvalueStream, meta: DomainMeta, gamma: float, lam: float) -> float:
    """Upper Riesz bound for Dirichlet spectra: bound minus Riesz mean."""
    _require_gamma_ge_1(gamma)
    _require_bc(meta, BoundaryCondition.DIRICHLET, "the Berezin bound")
    return _one_term_bound(meta, gamma, lam) - riesz_mean(s, gamma, lam)


def laptev_neumann_margin(s: EigenvalueStream, meta: DomainMeta, gamma: float, lam: float) -> float:
    """Lower Riesz bound for Neumann spectra: Riesz mean minus bound."""
    _require_gamma_ge_1(gamma)
    _require_bc(meta, BoundaryCondition.NEUMANN, "the Laptev bound")
    return riesz_mean(s, gamma, lam) - _one_term_bound(meta, gamma, lam)


def _polya_weyl_factor(meta: DomainMeta) -> float:
    return 4.0 * math.pi ** 2 / (omega_d(meta.dimension) * meta.volume) ** (2.0 / meta.dimension)


def li_yau_checks(s: EigenvalueStream, meta: DomainMeta, k: int) -> tuple[float, float]:
    """Lower bounds on the k-th partial sum and on the k-th Dirichlet eigenvalue.

    Returns (sum_margin, eigen_margin), both expected nonnegative on true
    Dirichlet spectra.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    _require_bc(meta, BoundaryCondition.DIRICHLET, "the Li-Yau bound")
    eigs = s.expanded()
    if eigs.size < k:
        raise CoverageError(f"stream holds {eigs.size} eigenvalues, needs {k}")
    d = meta.dimension
    w = _polya_weyl_factor(meta)
    factor = d / (d + 2.0)
    sum_margin = float(np.sum(eigs[:k])) - factor * w * k ** ((d + 2.0) / d)
    eigen_margin = float(eigs[k - 1]) - factor * w * k ** (2.0 / d)
    return sum_margin, eigen_margin


def kroger_check(s: EigenvalueStream, meta: DomainMeta, k: int) -> float:
    """Upper bound on the k-th nonzero Neumann eigenvalue; margin >= 0 expected."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    _require_bc(meta, BoundaryCondition.NEUMANN, "the Kroger bound")
    if s.index_origin != 0:
        raise ModeError("Neumann streams must contain the zero mode")
    eigs = s.expanded()
    if eigs.size < k + 1:
        raise CoverageError(f"stream holds {eigs.size} eigenvalues, needs mu_{k}")
    d = meta.dimension
    bound = ((d + 2.0) / 2.0) ** (2.0 / d) * _polya_weyl_factor(meta) * k ** (2.0 / d)
    return bound - float(eigs[k])


@dataclass(frozen=True)
class TwoTermScan:
    """Jump-point margins of a two-term Riesz inequality.

    ``lambda_star`` is the smallest scanned point from which the margin
    stays nonnegative through the end of the scan (None when the final
    margin is negative); it is an empirical surrogate for the inequality's
    non-constructive onset, valid only for the scanned window.
    """

    side: str
    gamma: float
    points: tuple[tuple[float, float, float, float], ...]  # (lambda, riesz, bound, margin)
    lambda_star: Optional[float]
    worst_margin: float
    worst_lambda: float

    def rows(self):
        return list(self.points)


def two_term_riesz_scan(s: EigenvalueStream, meta: DomainMeta, gamma: float,
                        cutoff: float, side: str) -> TwoTermScan:
    """Scan the two-term Riesz inequality at all jump points up to ``cutoff``.

    side="dirichlet": bound = L |Omega| lam^(g+d/2) - (1/5) L' |bOmega| lam^(g+(d-1)/2),
    margin = bound - riesz.  side="neumann": the mirror with + (1/5) and
    margin = riesz - bound.
    """
    if side not in ("dirichlet", "neumann"):
        raise DomainError(f"side must be 'dirichlet' or 'neumann', got {side!r}")
    if meta.surface_area is None:
        raise ConfigError("two-term Riesz bounds need meta.surface_area")
    _require_gamma_ge_1(gamma)
    _require_bc(meta, BoundaryCondition(side), "this two-term bound")
    if cutoff > s.cutoff:
        raise CoverageError(f"scan cutoff {cutoff} exceeds stream cutoff {s.cutoff}")
    d = meta.dimension
    lams = s.values[(s.values > 0) & (s.values <= cutoff)]
    if lams.size == 0:
        raise CoverageError("no positive jump points below the scan cutoff")
    riesz = riesz_mean_many(s, gamma, lams)
    lead = l_gamma_d(gamma, d) * meta.volume * lams ** (gamma + d / 2.0)
    corr = 0.2 * l_gamma_d(gamma, d - 1) * meta.surface_area * lams ** (gamma + (d - 1) / 2.0)
    if side == "dirichlet":
        bound = lead - corr
        margin = bound - riesz
    else:
        bound = lead + corr
        margin = riesz - bound
    neg = np.nonzero(margin < 0)[0]
    if neg.size == 0:
        lambda_star = float(lams[0])
    elif neg[-1] == lams.size - 1:
        lambda_star = None
    else:
        lambda_star = float(lams[neg[-1] + 1])
    worst = int(np.argmin(margin))
    points = tuple(
        (float(l), float(r), float(b), float(m))
        for l, r, b, m in zip(lams, riesz, bound, margin)
    )
    return TwoTermScan(side, gamma, points, lambda_star,
                       float(margin[worst]), float(lams[worst]))


# ---------------------------------------------------------------------------
# window scans for the product-argument gap constants


@dataclass(frozen=True)
class WindowScan:
    value: float
    mu: float
    window: tuple[float, float]


def _window_grid(s: EigenvalueStream, lo: float, hi: float, grid: int) -> np.ndarray:
    if not 0 < lo < hi:
        raise DomainError(f"need 0 < A < B, got [{lo}, {hi}]")
    if hi > s.cutoff:
        raise CoverageError(f"window end {hi} exceeds stream cutoff {s.cutoff}")
    mus = np.linspace(lo, hi, grid)
    jumps = s.values[(s.values >= lo) & (s.values <= hi)]
    return np.unique(np.concatenate([mus, jumps]))


def window_infimum_dirichlet(s: EigenvalueStream, meta: DomainMeta, d2: int,
                             window: tuple[float, float], grid: int = 4096) -> WindowScan:
    """Infimum over the window of the normalized Berezin gap
    [L |Omega| mu^((d1+d2)/2) - R_{d2/2}(mu)] / mu^((d1+d2-1)/2)."""
    _require_bc(meta, BoundaryCondition.DIRICHLET, "this gap scan")
    mus = _window_grid(s, *window, grid=grid)
    gamma = d2 / 2.0
    d1 = meta.dimension
    lead = l_gamma_d(gamma, d1) * meta.volume * mus ** ((d1 + d2) / 2.0)
    vals = (lead - riesz_mean_many(s, gamma, mus)) / mus ** ((d1 + d2 - 1) / 2.0)
    i = int(np.argmin(vals))
    return WindowScan(float(vals[i]), float(mus[i]), (float(window[0]), float(window[1])))


def window_infimum_neumann(s: EigenvalueStream, meta: DomainMeta, d2: int,
                           window: tuple[float, float], grid: int = 4096) -> WindowScan:
    """Infimum over the window of the mirrored normalized gap for Neumann
    spectra: [R_{d2/2}(mu) - L |Omega| mu^((d1+d2)/2)] / mu^((d1+d2-1)/2)."""
    _require_bc(meta, BoundaryCondition.NEUMANN, "this gap scan")
    mus = _window_grid(s, *window, grid=grid)
    gamma = d2 / 2.0
    d1 = meta.dimension
    lead = l_gamma_d(gamma, d1) * meta.volume * mus ** ((d1 + d2) / 2.0)
    vals = (riesz_mean_many(s, gamma, mus) - lead) / mus ** ((d1 + d2 - 1) / 2.0)
    i = int(np.argmin(vals))
    return WindowScan(float(vals[i]), float(mus[i]), (float(window[0]), float(window[1])))


def window_supremum_neumann(s: EigenvalueStream, meta: DomainMeta, d2: int,
                            window: tuple[float, float], grid: int = 4096) -> WindowScan:
    """Supremum over the window of R_{(d2-1)/2}(mu) / mu^((d1+d2-1)/2)."""
    _require_bc(meta, BoundaryCondition.NEUMANN, "this gap scan")
    mus = _window_grid(s, *window, grid=grid)
    gamma = (d2 - 1) / 2.0
    d1 = meta.dimension
    vals = riesz_mean_many(s, gamma, mus) / mus ** ((d1 + d2 - 1) / 2.0)
    i = int(np.argmax(vals))
    return WindowScan(float(vals[i]), float(mus[i]), (float(window[0]), float(window[1])))
