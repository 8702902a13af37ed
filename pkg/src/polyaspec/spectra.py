"""Exact Laplace spectra of model domains and their products.

The generators cover the model families with closed-form spectra: intervals,
rectangular boxes, the unit-side equilateral triangle (Neumann, via the
lattice counting formula) and the round 2-sphere.  ``product_spectrum``
composes two spectra by pairwise sums, which is how product domains get
their eigenvalues.

A stream records eigenvalues strictly below a cutoff, with multiplicities.
When the generating lengths are rational multiples of pi, the stream also
carries exact rational representations of its values (``exact_entries``,
scaled by ``pi**pi_power``), enabling integer-only inequality checks
downstream.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    CoverageError,
    DomainError,
    InternalConsistencyError,
    ModeError,
    ValidationError,
)
from .pivals import PiRational, as_pi_rational

__all__ = [
    "BoundaryCondition",
    "DomainMeta",
    "EigenvalueStream",
    "interval_spectrum",
    "box_spectrum",
    "sphere2_spectrum",
    "triangle_neumann_counting",
    "triangle_neumann_spectrum",
    "product_spectrum",
    "tabulated_spectrum",
    "interval_meta",
    "box_meta",
    "sphere2_meta",
    "triangle_meta",
    "product_meta",
    "stream_to_csv",
    "stream_from_csv",
    "stream_to_json_dict",
    "stream_from_json_dict",
]

#: relative tolerance for merging coinciding float eigenvalues
FLOAT_MERGE_RTOL = 1e-12

#: guard against silent int64 overflow in exact integer paths
_INT64_GUARD = 2 ** 62


class BoundaryCondition(str, Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"
    CLOSED = "closed"


@dataclass(frozen=True)
class DomainMeta:
    """Geometric data a bound needs: dimension, volume, boundary area, bc."""

    dimension: int
    volume: float
    bc: BoundaryCondition
    surface_area: Optional[float] = None
    exact_volume: Optional[PiRational] = None

    def __post_init__(self):
        if self.dimension < 1:
            raise DomainError(f"dimension must be >= 1, got {self.dimension}")
        if not self.volume > 0:
            raise DomainError(f"volume must be positive, got {self.volume}")
        if self.surface_area is not None and not self.surface_area > 0:
            raise DomainError("surface_area, when present, must be positive")
        object.__setattr__(self, "bc", BoundaryCondition(self.bc))


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class EigenvalueStream:
    """Increasing (value, multiplicity) pairs below a cutoff.

    ``exact_entries``, when present, holds the same values as exact
    ``Fraction`` coefficients of ``pi**pi_power``; the float ``values`` are
    derived from them.
    """

    values: np.ndarray
    multiplicities: np.ndarray
    cutoff: float
    exact_entries: Optional[tuple[Fraction, ...]] = None
    pi_power: int = 0

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        mults = np.asarray(self.multiplicities, dtype=np.int64)
        if values.ndim != 1 or mults.shape != values.shape:
            raise ValidationError("values and multiplicities must be matching 1-D arrays")
        if not self.cutoff > 0:
            raise DomainError(f"cutoff must be positive, got {self.cutoff}")
        if values.size:
            if values[0] < 0:
                raise ValidationError("eigenvalues must be nonnegative")
            if np.any(np.diff(values) <= 0):
                raise ValidationError("eigenvalues must be strictly increasing")
            if values[-1] >= self.cutoff:
                raise ValidationError("all eigenvalues must lie strictly below the cutoff")
        if np.any(mults < 1):
            raise ValidationError("multiplicities must be positive integers")
        if self.exact_entries is not None:
            exact = tuple(Fraction(e) for e in self.exact_entries)
            if len(exact) != values.size:
                raise ValidationError("exact_entries length does not match values")
            if any(b <= a for a, b in zip(exact, exact[1:])):
                raise ValidationError("exact_entries must be strictly increasing")
            object.__setattr__(self, "exact_entries", exact)
        object.__setattr__(self, "values", _readonly(values))
        object.__setattr__(self, "multiplicities", _readonly(mults))

    # -- basic queries -----------------------------------------------------

    @property
    def exact(self) -> bool:
        return self.exact_entries is not None

    @property
    def index_origin(self) -> int:
        """0 when the stream starts with the zero mode, else 1."""
        if self.values.size and self.values[0] == 0.0:
            return 0
        return 1

    @property
    def total_count(self) -> int:
        return int(self.multiplicities.sum())

    def entries(self) -> Iterator[tuple[float, int]]:
        for v, m in zip(self.values, self.multiplicities):
            yield float(v), int(m)

    def expanded(self) -> np.ndarray:
        """Eigenvalues repeated with multiplicity, ascending."""
        return np.repeat(self.values, self.multiplicities)

    def _check_range(self, lam: float) -> None:
        if lam > self.cutoff:
            raise CoverageError(
                f"lambda={lam} exceeds stream cutoff {self.cutoff}; regenerate with a larger cutoff"
            )

    def count(self, lam: float) -> int:
        """Number of eigenvalues strictly below ``lam`` (with multiplicity)."""
        self._check_range(lam)
        idx = np.searchsorted(self.values, lam, side="left")
        return int(self.multiplicities[:idx].sum())

    def count_right(self, lam: float) -> int:
        """Number of eigenvalues ``<= lam``: the right limit of the counting step."""
        self._check_range(lam)
        idx = np.searchsorted(self.values, lam, side="right")
        return int(self.multiplicities[:idx].sum())

    def cumulative_counts(self) -> np.ndarray:
        """``cumulative_counts()[i]`` counts eigenvalues <= values[i]."""
        return np.cumsum(self.multiplicities)

    def truncated(self, cutoff: float) -> "EigenvalueStream":
        """The same stream restricted to values strictly below ``cutoff``."""
        self._check_range(cutoff)
        mask = self.values < cutoff
        exact = None
        if self.exact_entries is not None:
            exact = tuple(e for e, keep in zip(self.exact_entries, mask) if keep)
        return EigenvalueStream(
            self.values[mask], self.multiplicities[mask], cutoff, exact, self.pi_power
        )


# ---------------------------------------------------------------------------
# aggregation helpers


def _aggregate_float(values: np.ndarray, mults: np.ndarray, rtol: float = FLOAT_MERGE_RTOL):
    """Merge coinciding values up to a relative tolerance; exact-coincidence
    in the generators makes the tolerance a safety net, not a crutch."""
    if values.size == 0:
        return values.astype(float), mults.astype(np.int64)
    order = np.argsort(values, kind="stable")
    v = values[order]
    m = mults[order]
    gaps = np.diff(v) > rtol * np.maximum(np.abs(v[1:]), np.abs(v[:-1]))
    starts = np.concatenate(([0], np.nonzero(gaps)[0] + 1))
    agg_v = v[starts]
    agg_m = np.add.reduceat(m, starts)
    return agg_v, agg_m


def _stream_from_exact(nums: Iterable[int], mults: Iterable[int], den: int,
                       pi_power: int, cutoff: float) -> EigenvalueStream:
    """Aggregate integer numerators (over a common denominator) into a stream."""
    table: dict[int, int] = {}
    for n, m in zip(nums, mults):
        table[n] = table.get(n, 0) + int(m)
    scale = (math.pi ** pi_power) / den
    items = sorted(table.items())
    vals, ms, exact = [], [], []
    for n, m in items:
        v = n * scale
        if v < cutoff:
            vals.append(v)
            ms.append(m)
            exact.append(Fraction(n, den))
    return EigenvalueStream(np.array(vals, float), np.array(ms, np.int64),
                            cutoff, tuple(exact), pi_power)


# ---------------------------------------------------------------------------
# generators


def _axis_modes(side_float: float, coeff_float: float, bc: BoundaryCondition,
                cutoff: float) -> np.ndarray:
    """Mode numbers m with m**2 * coeff < cutoff, starting at 0 or 1."""
    start = 0 if bc is BoundaryCondition.NEUMANN else 1
    top = int(math.floor(math.sqrt(cutoff / coeff_float))) + 2
    m = np.arange(start, top + 1, dtype=np.int64)
    return m[(m.astype(float) ** 2) * coeff_float < cutoff]


def interval_spectrum(a, bc: BoundaryCondition, cutoff: float) -> EigenvalueStream:
    """Spectrum of the interval (0, a): values l**2 * pi**2 / a**2.

    Dirichlet modes start at l = 1, Neumann at l = 0.  ``a`` may be a float,
    an int, a Fraction, or a symbolic string like ``"pi/24"``; symbolic and
    rational lengths produce exact streams.
    """
    bc = BoundaryCondition(bc)
    if bc is BoundaryCondition.CLOSED:
        raise DomainError("interval spectra are Dirichlet or Neumann")
    if not cutoff > 0:
        raise DomainError(f"cutoff must be positive, got {cutoff}")
    a_pi = as_pi_rational(a)
    a_float = float(a_pi) if a_pi is not None else float(a)
    if not a_float > 0:
        raise DomainError(f"interval length must be positive, got {a}")

    if a_pi is not None:
        coeff = PiRational(Fraction(1), 2) / (a_pi * a_pi)  # pi^2 / a^2
        ls = _axis_modes(a_float, float(coeff), bc, cutoff)
        den = coeff.coeff.denominator
        w = int(coeff.coeff * den)
        nums = (ls.astype(object) ** 2) * w
        return _stream_from_exact(nums, np.ones_like(ls), den, coeff.pi_power, cutoff)

    coeff_float = math.pi ** 2 / a_float ** 2
    ls = _axis_modes(a_float, coeff_float, bc, cutoff)
    values = coeff_float * ls.astype(float) ** 2
    return EigenvalueStream(values, np.ones_like(ls), cutoff)


def box_spectrum(sides: Sequence, bc: BoundaryCondition, cutoff: float) -> EigenvalueStream:
    """Spectrum of a rectangular box: sums of per-axis interval modes."""
    bc = BoundaryCondition(bc)
    if bc is BoundaryCondition.CLOSED:
        raise DomainError("box spectra are Dirichlet or Neumann")
    if not sides:
        raise DomainError("side list must be nonempty")
    if not cutoff > 0:
        raise DomainError(f"cutoff must be positive, got {cutoff}")

    side_pis = [as_pi_rational(s) for s in sides]
    side_floats = [float(p) if p is not None else float(s) for p, s in zip(side_pis, sides)]
    if any(not s > 0 for s in side_floats):
        raise DomainError("all sides must be positive")

    coeff_pis = [PiRational(Fraction(1), 2) / (p * p) if p is not None else None
                 for p in side_pis]
    exact = all(c is not None for c in coeff_pis) and len({c.pi_power for c in coeff_pis}) == 1
    coeff_floats = [float(c) if c is not None else math.pi ** 2 / s ** 2
                    for c, s in zip(coeff_pis, side_floats)]
    axes = [_axis_modes(s, c, bc, cutoff) for s, c in zip(side_floats, coeff_floats)]

    if exact:
        pi_power = coeff_pis[0].pi_power
        den = math.lcm(*(c.coeff.denominator for c in coeff_pis))
        weights = [int(c.coeff * den) for c in coeff_pis]
        bound = sum(w * int(ax.max()) ** 2 for w, ax in zip(weights, axes) if ax.size)
        if bound < _INT64_GUARD:
            grids = np.meshgrid(*axes, indexing="ij", sparse=True)
            nums = sum(w * g.astype(np.int64) ** 2 for w, g in zip(weights, grids))
            nums = np.asarray(nums).ravel()
            scale = (math.pi ** pi_power) / den
            keep = nums * scale < cutoff
            uniq, counts = np.unique(nums[keep], return_counts=True)
            return _stream_from_exact(uniq.tolist(), counts.tolist(), den, pi_power, cutoff)
        # fall through to the float path on (unrealistic) overflow risk

    axis_vals = [c * ax.astype(float) ** 2 for c, ax in zip(coeff_floats, axes)]
    total = axis_vals[0]
    for av in axis_vals[1:]:
        total = (total[:, None] + av[None, :]).ravel()
        total = total[total < cutoff]
    total = total[total < cutoff]
    vals, mults = _aggregate_float(total, np.ones(total.size, np.int64))
    return EigenvalueStream(vals, mults, cutoff)


def sphere2_spectrum(cutoff: float) -> EigenvalueStream:
    """Spectrum of the round 2-sphere: k(k+1) with multiplicity 2k+1."""
    if not cutoff > 0:
        raise DomainError(f"cutoff must be positive, got {cutoff}")
    ks = []
    k = 0
    while k * (k + 1) < cutoff:
        ks.append(k)
        k += 1
    nums = [k * (k + 1) for k in ks]
    mults = [2 * k + 1 for k in ks]
    return _stream_from_exact(nums, mults, 1, 0, cutoff)


# -- equilateral triangle (Neumann), side length 1 --------------------------

_TRI_FACTOR = 16.0 * math.pi ** 2 / 27.0


def _triangle_lattice(limit_q: float):
    """Integer pairs (m, n) with m^2 + n^2 - mn < limit_q, split into the
    exceptional lines (n=2m, m=2n, n=-m) and the rest restricted to 3|(m+n).

    Returns (q_regular, q_special) arrays of quadratic-form values.
    """
    bound = int(math.ceil(2.0 * math.sqrt(max(limit_q, 1.0))))
    m, n = np.meshgrid(np.arange(-bound, bound + 1, dtype=np.int64),
                       np.arange(-bound, bound + 1, dtype=np.int64), indexing="ij")
    q = m * m + n * n - m * n
    inside = q.astype(float) < limit_q
    special = (n == 2 * m) | (m == 2 * n) | (n == -m)
    divisible = (m + n) % 3 == 0
    q_regular = q[inside & ~special & divisible]
    q_special = q[inside & special]
    return q_regular, q_special


def triangle_neumann_counting(lam: float) -> int:
    """Neumann counting function of the unit-side equilateral triangle.

    Weighted lattice count: 1/6 per regular pair with 3|(m+n), 1/3 per pair
    on the exceptional lines, plus a constant 2/3.  Assembled in exact
    rational arithmetic; a non-integer total is an internal error.
    """
    return _triangle_count(lam, inclusive=False)


def _triangle_count(lam: float, inclusive: bool) -> int:
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    limit_q = 27.0 * lam / (16.0 * math.pi ** 2)
    q_regular, q_special = _triangle_lattice(limit_q + 1.0)
    if inclusive:
        reg = int(np.sum(q_regular * _TRI_FACTOR <= lam))
        spe = int(np.sum(q_special * _TRI_FACTOR <= lam))
    else:
        reg = int(np.sum(q_regular * _TRI_FACTOR < lam))
        spe = int(np.sum(q_special * _TRI_FACTOR < lam))
    total = Fraction(reg, 6) + Fraction(spe, 3) + Fraction(2, 3)
    if total.denominator != 1:
        raise InternalConsistencyError(
            f"triangle count assembled to non-integer {total} at lambda={lam}"
        )
    return int(total)


def triangle_neumann_spectrum(cutoff: float) -> EigenvalueStream:
    """Eigenvalue stream of the unit equilateral triangle (Neumann).

    Derived from the counting formula: the multiplicity at quadratic-form
    value q is the weighted number of lattice pairs sitting exactly at q,
    and must come out a nonnegative integer.
    """
    if not cutoff > 0:
        raise DomainError(f"cutoff must be positive, got {cutoff}")
    limit_q = 27.0 * cutoff / (16.0 * math.pi ** 2)
    q_regular, q_special = _triangle_lattice(limit_q + 1.0)
    weights: dict[int, Fraction] = {0: Fraction(2, 3)}  # constant term joins the zero mode
    for q_arr, w in ((q_regular, Fraction(1, 6)), (q_special, Fraction(1, 3))):
        uniq, counts = np.unique(q_arr, return_counts=True)
        for q, c in zip(uniq.tolist(), counts.tolist()):
            weights[q] = weights.get(q, Fraction(0)) + w * c
    nums, mults = [], []
    for q in sorted(weights):
        mult = weights[q]
        if mult == 0:
            continue
        if mult.denominator != 1:
            raise InternalConsistencyError(
                f"triangle multiplicity at q={q} is non-integer: {mult}"
            )
        if q * _TRI_FACTOR < cutoff:
            nums.append(16 * q)
            mults.append(int(mult))
    return _stream_from_exact(nums, mults, 27, 2, cutoff)


def product_spectrum(s1: EigenvalueStream, s2: EigenvalueStream,
                     cutoff: float) -> EigenvalueStream:
    """Pairwise sums of two spectra below ``cutoff``, multiplicities multiplied.

    Both inputs must cover [0, cutoff); otherwise sums below the cutoff
    would be silently missing.
    """
    if not cutoff > 0:
        raise DomainError(f"cutoff must be positive, got {cutoff}")
    if s1.cutoff < cutoff or s2.cutoff < cutoff:
        raise CoverageError(
            "product cutoff exceeds an input cutoff "
            f"({s1.cutoff}, {s2.cutoff} < {cutoff}); regenerate the factors"
        )
    s1 = s1.truncated(cutoff)
    s2 = s2.truncated(cutoff)

    if s1.exact and s2.exact and s1.pi_power == s2.pi_power:
        pi_power = s1.pi_power
        d1 = math.lcm(*(e.denominator for e in s1.exact_entries)) if s1.exact_entries else 1
        d2 = math.lcm(*(e.denominator for e in s2.exact_entries)) if s2.exact_entries else 1
        den = math.lcm(d1, d2)
        n1 = np.array([int(e * den) for e in s1.exact_entries], dtype=np.int64)
        n2 = np.array([int(e * den) for e in s2.exact_entries], dtype=np.int64)
        if (not n1.size or not n2.size
                or int(n1.max()) + int(n2.max()) < _INT64_GUARD):
            scale = (math.pi ** pi_power) / den
            table: dict[int, int] = {}
            for num1, mult1 in zip(n1.tolist(), s1.multiplicities.tolist()):
                idx = int(np.searchsorted((n2 + num1) * scale, cutoff, side="left"))
                for num2, mult2 in zip(n2[:idx].tolist(), s2.multiplicities[:idx].tolist()):
                    key = num1 + num2
                    table[key] = table.get(key, 0) + mult1 * mult2
            return _stream_from_exact(table.keys(), table.values(), den, pi_power, cutoff)

    sums, mults = [], []
    for v1, m1 in s1.entries():
        idx = int(np.searchsorted(v1 + s2.values, cutoff, side="left"))
        if idx:
            sums.append(v1 + s2.values[:idx])
            mults.append(m1 * s2.multiplicities[:idx])
    if sums:
        vals, ms = _aggregate_float(np.concatenate(sums), np.concatenate(mults))
    else:
        vals, ms = np.empty(0), np.empty(0, np.int64)
    return EigenvalueStream(vals, ms, cutoff)


def tabulated_spectrum(entries: Iterable, cutoff: float,
                       meta: Optional[DomainMeta] = None) -> EigenvalueStream:
    """Validate externally supplied (value, multiplicity) pairs into a stream.

    Values may be floats, ints, Fractions or rational strings; an all-exact
    input yields an exact stream.  Input must be strictly increasing with
    already-aggregated multiplicities.
    """
    if not cutoff > 0:
        raise DomainError(f"cutoff must be positive, got {cutoff}")
    values, mults, exacts = [], [], []
    all_exact = True
    for item in entries:
        try:
            v, m = item
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"entry {item!r} is not a (value, multiplicity) pair") from exc
        if not float(m) == int(m) or int(m) < 1:
            raise ValidationError(f"multiplicity must be a positive integer, got {m!r}")
        pi_val = None
        if not isinstance(v, float):
            try:
                pi_val = as_pi_rational(v)
            except ValidationError:
                pi_val = None
        if pi_val is not None and pi_val.is_rational:
            exacts.append(pi_val.as_fraction())
            values.append(float(pi_val))
        else:
            all_exact = False
            values.append(float(v))
        mults.append(int(m))
    arr = np.array(values, float)
    if arr.size:
        if arr[0] < 0:
            raise ValidationError("eigenvalues must be nonnegative")
        if np.any(np.diff(arr) < 0):
            raise ValidationError("entries must be sorted increasing")
        if np.any(np.diff(arr) == 0):
            raise ValidationError("duplicate values must be aggregated before tabulation")
        if arr[-1] >= cutoff:
            raise ValidationError("all tabulated values must lie strictly below the cutoff")
    if meta is not None:
        bc = BoundaryCondition(meta.bc)
        if bc in (BoundaryCondition.NEUMANN, BoundaryCondition.CLOSED):
            if arr.size == 0 or arr[0] != 0.0:
                raise ModeError(f"{bc.value} spectra must start with the zero mode")
        elif arr.size and arr[0] == 0.0:
            raise ModeError("dirichlet spectra must not contain the zero mode")
    exact_entries = tuple(exacts) if (all_exact and len(exacts) == len(values)) else None
    return EigenvalueStream(arr, np.array(mults, np.int64), cutoff, exact_entries, 0)


# ---------------------------------------------------------------------------
# domain metadata builders


def interval_meta(a, bc: BoundaryCondition) -> DomainMeta:
    a_pi = as_pi_rational(a)
    a_float = float(a_pi) if a_pi is not None else float(a)
    return DomainMeta(1, a_float, BoundaryCondition(bc), surface_area=2.0, exact_volume=a_pi)


def box_meta(sides: Sequence, bc: BoundaryCondition) -> DomainMeta:
    pis = [as_pi_rational(s) for s in sides]
    floats = [float(p) if p is not None else float(s) for p, s in zip(pis, sides)]
    volume = math.prod(floats)
    surface = sum(2.0 * volume / s for s in floats) if len(floats) > 1 else 2.0
    exact = None
    if all(p is not None for p in pis):
        exact = PiRational(Fraction(1))
        for p in pis:
            exact = exact * p
    return DomainMeta(len(floats), volume, BoundaryCondition(bc),
                      surface_area=surface, exact_volume=exact)


def sphere2_meta() -> DomainMeta:
    return DomainMeta(2, 4.0 * math.pi, BoundaryCondition.CLOSED,
                      exact_volume=PiRational(Fraction(4), 1))


def triangle_meta() -> DomainMeta:
    return DomainMeta(2, math.sqrt(3.0) / 4.0, BoundaryCondition.NEUMANN, surface_area=3.0)


def product_meta(m1: DomainMeta, m2: DomainMeta) -> DomainMeta:
    bcs = {m1.bc, m2.bc}
    if BoundaryCondition.DIRICHLET in bcs:
        bc = BoundaryCondition.DIRICHLET
    elif BoundaryCondition.NEUMANN in bcs:
        bc = BoundaryCondition.NEUMANN
    else:
        bc = BoundaryCondition.CLOSED
    s1 = m1.surface_area or 0.0
    s2 = m2.surface_area or 0.0
    surface = s1 * m2.volume + m1.volume * s2
    exact = None
    if m1.exact_volume is not None and m2.exact_volume is not None:
        exact = m1.exact_volume * m2.exact_volume
    return DomainMeta(m1.dimension + m2.dimension, m1.volume * m2.volume, bc,
                      surface_area=surface if surface > 0 else None, exact_volume=exact)


# ---------------------------------------------------------------------------
# serialization


def stream_to_csv(stream: EigenvalueStream, fp) -> None:
    """Write ``value,multiplicity`` rows in increasing value order."""
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["value", "multiplicity"])
    for v, m in stream.entries():
        writer.writerow([repr(v), m])


def stream_from_csv(fp, cutoff: Optional[float] = None) -> EigenvalueStream:
    reader = csv.reader(fp)
    header = next(reader, None)
    if header is None or [h.strip() for h in header[:2]] != ["value", "multiplicity"]:
        raise ValidationError("expected header 'value,multiplicity'")
    entries = [(float(row[0]), int(row[1])) for row in reader if row]
    if cutoff is None:
        last = entries[-1][0] if entries else 0.0
        cutoff = math.nextafter(last, math.inf) if last > 0 else 1.0
    return tabulated_spectrum(entries, cutoff)


def stream_to_json_dict(stream: EigenvalueStream) -> dict:
    return {
        "cutoff": stream.cutoff,
        "exact": stream.exact,
        "entries": [[v, m] for v, m in stream.entries()],
    }


def stream_from_json_dict(data: dict) -> EigenvalueStream:
    try:
        cutoff = float(data["cutoff"])
        entries = data["entries"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed spectrum JSON: {exc}") from exc
    return tabulated_spectrum(entries, cutoff)
