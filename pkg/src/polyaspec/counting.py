"""Counting functions, Weyl predictions, and empirical remainder constants.

The counting function N(lambda) counts eigenvalues strictly below lambda,
with multiplicity.  It is a nondecreasing integer step function whose jumps
sit at the eigenvalues; bound checks against monotone bounds therefore only
need to look at jumps (right limits for upper bounds, values for lower
bounds).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .constants import c_d
from .errors import CoverageError, DomainError
from .spectra import DomainMeta, EigenvalueStream

__all__ = [
    "CountingFunction",
    "SumCountingFunction",
    "jump_points",
    "product_count",
    "weyl_leading",
    "two_term_bound",
    "estimate_seeley_constant",
    "SeeleyEstimate",
]


class CountingFunction:
    """An eigenvalue counting function with its domain metadata.

    Backed either by an eigenvalue stream or by a closed-form counter (as
    for the equilateral triangle).  Closed-form counters may supply their
    jump locations separately so jump scans stay possible.
    """

    def __init__(self, meta: DomainMeta, *, stream: Optional[EigenvalueStream] = None,
                 fn: Optional[Callable[[float], int]] = None,
                 fn_right: Optional[Callable[[float], int]] = None,
                 jump_values: Optional[np.ndarray] = None,
                 cutoff: Optional[float] = None):
        if (stream is None) == (fn is None):
            raise DomainError("provide exactly one of stream= or fn=")
        self.meta = meta
        self.stream = stream
        self._fn = fn
        self._fn_right = fn_right
        self._jump_values = np.asarray(jump_values, float) if jump_values is not None else None
        self._cutoff = cutoff if cutoff is not None else (stream.cutoff if stream else None)

    @classmethod
    def from_stream(cls, stream: EigenvalueStream, meta: DomainMeta) -> "CountingFunction":
        return cls(meta, stream=stream)

    @classmethod
    def from_callable(cls, fn: Callable[[float], int], meta: DomainMeta, *,
                      fn_right: Optional[Callable[[float], int]] = None,
                      jump_values: Optional[Sequence[float]] = None,
                      cutoff: Optional[float] = None) -> "CountingFunction":
        return cls(meta, fn=fn, fn_right=fn_right,
                   jump_values=np.asarray(jump_values, float) if jump_values is not None else None,
                   cutoff=cutoff)

    @property
    def cutoff(self) -> Optional[float]:
        return self._cutoff

    def _check(self, lam: float) -> None:
        if self._cutoff is not None and lam > self._cutoff:
            raise CoverageError(f"lambda={lam} exceeds covered range {self._cutoff}")

    def count(self, lam: float) -> int:
        """Number of eigenvalues strictly below ``lam``."""
        if self.stream is not None:
            return self.stream.count(lam)
        self._check(lam)
        return int(self._fn(lam))

    def count_right(self, lam: float) -> int:
        """Right limit of the counting step at ``lam`` (counts values <= lam)."""
        if self.stream is not None:
            return self.stream.count_right(lam)
        self._check(lam)
        if self._fn_right is not None:
            return int(self._fn_right(lam))
        return int(self._fn(math.nextafter(lam, math.inf)))

    def jump_values(self) -> np.ndarray:
        """Distinct eigenvalues below the covered range, ascending."""
        if self.stream is not None:
            return self.stream.values
        if self._jump_values is None:
            raise CoverageError("this closed-form counter carries no jump list")
        return self._jump_values


class SumCountingFunction:
    """Counting function of a disjoint union: the sum of the parts' counts."""

    def __init__(self, parts: Sequence[CountingFunction]):
        if not parts:
            raise DomainError("need at least one counting function")
        self.parts = list(parts)

    def count(self, lam: float) -> int:
        return sum(p.count(lam) for p in self.parts)

    def count_right(self, lam: float) -> int:
        return sum(p.count_right(lam) for p in self.parts)

    def jump_values(self) -> np.ndarray:
        return np.unique(np.concatenate([p.jump_values() for p in self.parts]))

    @property
    def cutoff(self) -> Optional[float]:
        cuts = [p.cutoff for p in self.parts if p.cutoff is not None]
        return min(cuts) if cuts else None


def jump_points(stream: EigenvalueStream) -> list[tuple[float, int, int]]:
    """One ``(lambda_j, N(lambda_j), N(lambda_j+))`` triple per distinct eigenvalue."""
    cum = stream.cumulative_counts()
    out = []
    before = 0
    for v, after in zip(stream.values, cum):
        out.append((float(v), int(before), int(after)))
        before = after
    return out


def product_count(s1: EigenvalueStream, cf2: CountingFunction, lam: float) -> int:
    """Count of the product spectrum below ``lam`` without forming it:
    sum over first-factor eigenvalues v of mult(v) * N_2(lam - v)."""
    if lam > s1.cutoff:
        raise CoverageError(f"first factor covers only [0, {s1.cutoff}), needs {lam}")
    total = 0
    for v, m in s1.entries():
        if v >= lam:
            break
        total += m * cf2.count(lam - v)
    return total


def weyl_leading(meta: DomainMeta, lam: float) -> float:
    """Leading Weyl term C_d |Omega| lambda^(d/2)."""
    if lam < 0:
        raise DomainError(f"lambda must be nonnegative, got {lam}")
    return c_d(meta.dimension) * meta.volume * lam ** (meta.dimension / 2.0)


def two_term_bound(meta: DomainMeta, c_remainder: float, lam: float, side: str) -> float:
    """Two-term bound C_d |Omega| lambda^(d/2) +- C lambda^((d-1)/2).

    ``side`` is "upper" (+) or "lower" (-); C is the caller-supplied
    remainder constant, so the value is conditional on that choice.
    """
    if not c_remainder > 0:
        raise DomainError(f"remainder constant must be positive, got {c_remainder}")
    if lam < 0:
        raise DomainError(f"lambda must be nonnegative, got {lam}")
    lead = weyl_leading(meta, lam)
    corr = c_remainder * lam ** ((meta.dimension - 1) / 2.0)
    if side == "upper":
        return lead + corr
    if side == "lower":
        return lead - corr
    raise DomainError(f"side must be 'upper' or 'lower', got {side!r}")


@dataclass(frozen=True)
class SeeleyEstimate:
    """Empirical two-term remainder constant from a jump scan.

    ``value`` is the smallest C such that the two-term bound with constant C
    holds at every scanned jump; ``top`` lists the five largest normalized
    remainders with their locations, to expose non-convergence.
    """

    side: str
    value: float
    achieved_at: float
    top: tuple[tuple[float, float], ...]
    scanned: int


def estimate_seeley_constant(cf: CountingFunction, meta: DomainMeta, cutoff: float,
                             side: str, lambda_min: float = 0.0) -> SeeleyEstimate:
    """Scan jumps in (lambda_min, cutoff] for the worst two-term remainder.

    Upper side: sup of (N(lambda_j+) - weyl(lambda_j)) / lambda_j^((d-1)/2);
    lower side uses the jump value N(lambda_j) and the reversed sign.  The
    jump at lambda = 0 is always skipped: the normalizer vanishes there and
    the bound is trivial.
    """
    if side not in ("upper", "lower"):
        raise DomainError(f"side must be 'upper' or 'lower', got {side!r}")
    jumps = cf.jump_values()
    jumps = jumps[(jumps > max(lambda_min, 0.0)) & (jumps <= cutoff)]
    if jumps.size == 0:
        raise CoverageError("no jump points in the scan window; estimate undefined")
    d = meta.dimension
    lead = c_d(d) * meta.volume * jumps ** (d / 2.0)
    if side == "upper":
        counts = np.array([cf.count_right(v) for v in jumps], float)
        remainder = counts - lead
    else:
        counts = np.array([cf.count(v) for v in jumps], float)
        remainder = lead - counts
    ratios = np.maximum(remainder, 0.0) / jumps ** ((d - 1) / 2.0)
    order = np.argsort(ratios)[::-1][:5]
    top = tuple((float(ratios[i]), float(jumps[i])) for i in order)
    best = order[0]
    return SeeleyEstimate(side, float(ratios[best]), float(jumps[best]), top, int(jumps.size))
