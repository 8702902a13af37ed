"""Per-eigenvalue and counting-form verification of Polya-type inequalities.

The Dirichlet inequality says every eigenvalue sits above the Weyl
prediction w_k = 4 pi^2 (omega_d |Omega|)^(-2/d) k^(2/d); the Neumann
inequality says every nonzero eigenvalue sits below it.  Verification is a
finite sweep: per eigenvalue up to k_max, or at counting-function jumps
against a monotone bound.

Float comparisons use a guard band: relative margins within 1e-9 are
re-evaluated at high precision (exactly, when the stream carries exact
values).  Genuine ties count as satisfied, since the inequalities are
non-strict.  Streams without exact values cannot certify margins below
float resolution; those near-ties are accepted and counted in
``tie_breaks``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import mpmath
import numpy as np

from .counting import CountingFunction
from .errors import CoverageError, DomainError, ModeError
from .spectra import DomainMeta, EigenvalueStream

__all__ = [
    "VerificationReport",
    "polya_weyl_term",
    "verify_dirichlet",
    "verify_neumann",
    "verify_exact_power",
    "verify_counting_bound",
]

#: float margins smaller than this (relative) get re-evaluated
GUARD_BAND = 1e-9
#: after exact/high-precision re-evaluation, margins below this are ties
EQUALITY_BAND_EXACT = 1e-25
#: float-valued spectra cannot resolve relative margins below this
EQUALITY_BAND_FLOAT = 1e-12
#: working precision of the re-evaluation
_MP_DPS = 30


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification sweep.

    ``worst_margin`` is the minimal relative margin over all comparisons
    (negative on failure); ``failures`` lists (location, lhs, rhs) for every
    violated comparison.  ``checked < requested`` signals truncation: the
    stream ran out of eigenvalues and nothing is claimed beyond ``checked``.
    """

    mode: str
    checked: int
    requested: int
    verdict: str
    worst_margin: float
    worst_location: float
    failures: tuple[tuple[float, float, float], ...] = ()
    tie_breaks: int = 0
    margins: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    @property
    def truncated(self) -> bool:
        return self.checked < self.requested

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "checked": self.checked,
            "requested": self.requested,
            "verdict": self.verdict,
            "worst_margin": self.worst_margin,
            "worst_location": self.worst_location,
            "failures": [list(f) for f in self.failures],
            "tie_breaks": self.tie_breaks,
        }


def polya_weyl_term(meta: DomainMeta, k) -> float:
    """The Weyl prediction 4 pi^2 (omega_d |Omega|)^(-2/d) k^(2/d)."""
    from .constants import omega_d

    d = meta.dimension
    factor = 4.0 * math.pi ** 2 / (omega_d(d) * meta.volume) ** (2.0 / d)
    return factor * np.asarray(k, float) ** (2.0 / d)


def _reevaluate(value, exact_value: Optional[Fraction], meta: DomainMeta, k: int,
                side: str) -> tuple[bool, bool]:
    """High-precision re-check of one comparison near a float tie.

    Returns (satisfied, was_tie).  Exact stream values enter the comparison
    as rationals; float values are taken at face value, and margins below
    float resolution count as ties.
    """
    d = meta.dimension
    with mpmath.workdps(_MP_DPS):
        omega = mpmath.pi ** (mpmath.mpf(d) / 2) / mpmath.gamma(mpmath.mpf(d) / 2 + 1)
        w = 4 * mpmath.pi ** 2 / (omega * meta.volume) ** (mpmath.mpf(2) / d) \
            * mpmath.mpf(k) ** (mpmath.mpf(2) / d)
        if exact_value is not None:
            lhs = mpmath.mpf(exact_value.numerator) / exact_value.denominator
            band = EQUALITY_BAND_EXACT
        else:
            lhs = mpmath.mpf(value)
            band = EQUALITY_BAND_FLOAT
        margin = (lhs - w) if side == "dirichlet" else (w - lhs)
        rel = margin / w
        if abs(rel) <= band:
            return True, True
        return rel > 0, False


def _per_eigenvalue(s: EigenvalueStream, meta: DomainMeta, k_max: int,
                    side: str) -> VerificationReport:
    if k_max < 1:
        raise DomainError(f"k_max must be >= 1, got {k_max}")
    eigs = s.expanded()
    exact_expanded: Optional[list[Fraction]] = None
    if s.exact and s.pi_power == 0:
        exact_expanded = [e for e, m in zip(s.exact_entries, s.multiplicities)
                          for _ in range(int(m))]
    if side == "dirichlet":
        if s.index_origin != 1:
            raise ModeError("Dirichlet verification needs a stream without the zero mode")
        candidates = eigs
        exact_candidates = exact_expanded
    else:
        if s.index_origin != 0:
            raise ModeError("Neumann verification needs the zero mode at index 0")
        candidates = eigs[1:]  # k = 0 is the zero mode, trivially below the bound
        exact_candidates = exact_expanded[1:] if exact_expanded is not None else None
    if candidates.size == 0:
        raise CoverageError("stream holds no eigenvalues to verify")

    checked = min(k_max, candidates.size)
    ks = np.arange(1, checked + 1, dtype=float)
    w = polya_weyl_term(meta, ks)
    values = candidates[:checked]
    margins = (values - w) / w if side == "dirichlet" else (w - values) / w

    tie_breaks = 0
    failures = []
    adjusted = margins.copy()
    suspicious = np.nonzero(np.abs(margins) <= GUARD_BAND)[0]
    for i in suspicious:
        exact_val = exact_candidates[i] if exact_candidates is not None else None
        ok, tie = _reevaluate(float(values[i]), exact_val, meta, int(i) + 1, side)
        tie_breaks += tie
        if ok and adjusted[i] < 0:
            adjusted[i] = 0.0
        elif not ok and adjusted[i] >= 0:
            adjusted[i] = -abs(adjusted[i]) - 1e-300
    for i in np.nonzero(adjusted < 0)[0]:
        failures.append((float(i + 1), float(values[i]), float(w[i])))
    worst = int(np.argmin(adjusted))
    return VerificationReport(
        mode="per_eigenvalue",
        checked=checked,
        requested=k_max,
        verdict="fails" if failures else "holds",
        worst_margin=float(adjusted[worst]),
        worst_location=float(worst + 1),
        failures=tuple(failures),
        tie_breaks=tie_breaks,
        margins=adjusted,
    )


def verify_dirichlet(s: EigenvalueStream, meta: DomainMeta, k_max: int) -> VerificationReport:
    """Check lambda_k >= w_k for k = 1..k_max (or as far as the stream goes)."""
    return _per_eigenvalue(s, meta, k_max, "dirichlet")


def verify_neumann(s: EigenvalueStream, meta: DomainMeta, k_max: int) -> VerificationReport:
    """Check mu_k <= w_k for k = 1..k_max; the zero mode passes trivially."""
    return _per_eigenvalue(s, meta, k_max, "neumann")


def verify_exact_power(s: EigenvalueStream, c_num: int, c_den: int, dimension: int,
                       k_max: int, side: str) -> VerificationReport:
    """Integer-only Polya check: value_k^d * c_den vs c_num * k^2.

    Valid when the stream is exact with rational values and the caller has
    rationalized the Polya constant: w_k^d = (c_num / c_den) * k^2.  The
    Dirichlet side requires >=, the Neumann side (skipping the zero mode)
    <=.  No floating point enters any comparison.
    """
    if side not in ("dirichlet", "neumann"):
        raise DomainError(f"side must be 'dirichlet' or 'neumann', got {side!r}")
    if c_num <= 0 or c_den <= 0:
        raise DomainError("the rationalized constant must be positive")
    if k_max < 1:
        raise DomainError(f"k_max must be >= 1, got {k_max}")
    if not s.exact or s.pi_power != 0:
        raise ModeError("exact verification needs a stream with rational exact values")
    expanded: list[Fraction] = [e for e, m in zip(s.exact_entries, s.multiplicities)
                                for _ in range(int(m))]
    if side == "neumann":
        if s.index_origin != 0:
            raise ModeError("Neumann verification needs the zero mode at index 0")
        expanded = expanded[1:]
    elif s.index_origin != 1:
        raise ModeError("Dirichlet verification needs a stream without the zero mode")
    if not expanded:
        raise CoverageError("stream holds no eigenvalues to verify")

    checked = min(k_max, len(expanded))
    failures = []
    worst_margin = math.inf
    worst_k = 1
    for k in range(1, checked + 1):
        lam = expanded[k - 1]
        lhs = lam ** dimension * c_den
        rhs = c_num * k * k
        satisfied = lhs >= rhs if side == "dirichlet" else lhs <= rhs
        rel = float((lhs - rhs) / rhs) if side == "dirichlet" else float((rhs - lhs) / rhs)
        if rel < worst_margin:
            worst_margin = rel
            worst_k = k
        if not satisfied:
            failures.append((float(k), float(lam), float(rhs) / c_den))
    return VerificationReport(
        mode="per_eigenvalue_exact",
        checked=checked,
        requested=k_max,
        verdict="fails" if failures else "holds",
        worst_margin=worst_margin,
        worst_location=float(worst_k),
        failures=tuple(failures),
    )


def verify_counting_bound(cf: CountingFunction, bound: Callable[[float], float],
                          side: str, lambda_min: float = 0.0,
                          lambda_max: Optional[float] = None,
                          jumps: Optional[Sequence[float]] = None) -> VerificationReport:
    """Check a counting function against a continuous monotone bound.

    Upper side: N(lambda_j+) <= bound(lambda_j) at every jump (plus at
    lambda_min itself), which is equivalent to N <= bound on all of
    (lambda_min, lambda_max].  Lower side: N(lambda_j) >= bound(lambda_j)
    at every jump plus the endpoint.
    """
    if side not in ("upper", "lower"):
        raise DomainError(f"side must be 'upper' or 'lower', got {side!r}")
    jump_arr = np.asarray(jumps, float) if jumps is not None else cf.jump_values()
    if lambda_max is None:
        if cf.cutoff is None:
            raise CoverageError("no lambda_max and the counting function has no cutoff")
        lambda_max = float(cf.cutoff)

    if side == "upper":
        # the right-limit check at a jump covers the plateau to its right, so
        # the jump at lambda_min (or at 0, when lambda_min is 0) is included
        points = jump_arr[(jump_arr >= lambda_min) & (jump_arr <= lambda_max)]
        if lambda_min > 0:
            points = np.unique(np.concatenate([[lambda_min], points]))
        counts = np.array([cf.count_right(p) for p in points], float)
        bounds = np.array([bound(p) for p in points], float)
        margins = bounds - counts
    else:
        jump_arr = jump_arr[(jump_arr > lambda_min) & (jump_arr <= lambda_max)]
        points = np.unique(np.concatenate([jump_arr, [lambda_max]]))
        counts = np.array([cf.count(p) for p in points], float)
        bounds = np.array([bound(p) for p in points], float)
        margins = counts - bounds
    if points.size == 0:
        raise CoverageError("no comparison points in the requested window")

    rel = margins / np.maximum(np.abs(bounds), 1.0)
    failures = tuple(
        (float(points[i]), float(counts[i]), float(bounds[i]))
        for i in np.nonzero(margins < 0)[0]
    )
    worst = int(np.argmin(rel))
    return VerificationReport(
        mode="counting_jumps",
        checked=int(points.size),
        requested=int(points.size),
        verdict="fails" if failures else "holds",
        worst_margin=float(rel[worst]),
        worst_location=float(points[worst]),
        failures=failures,
        margins=rel,
    )
