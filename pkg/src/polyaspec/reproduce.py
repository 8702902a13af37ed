"""One-command reproduction bundles for the two worked desk-scale examples.

``sphere_thin``: the product (0, a) x S^2.  At a = pi/24 the volume is
pi^2/6 and the Polya comparison rationalizes to the integer inequality
value^3 vs 1296 k^2, verified exactly for the first 100000 eigenvalues on
both sides.  Large a breaks both inequalities at k = 1, witnessed by
pi^2/a^2.

``square_triangle``: the planar domain made of a side-10 square with a
unit equilateral triangle attached to one side.  Its Neumann counting
function is bounded by the sum of the parts' counting functions, each of
which obeys an explicit two-term bound; the assembled remainder constant
50 feeds the thin-product threshold, which comes out above 1/(4 pi).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional

import numpy as np

from . import counting as ct
from . import polya as pv
from . import spectra as sp
from .constants import (
    ThresholdCase,
    ThresholdRequest,
    c_d,
    omega_d_exact,
    threshold_a0,
)
from .errors import InternalConsistencyError
from .pivals import PiRational

__all__ = [
    "rationalized_polya_constant",
    "sphere_thin_bundle",
    "square_triangle_bundle",
    "SPHERE_THIN_KMAX",
    "SQUARE_TRIANGLE_CUTOFF",
]

SPHERE_THIN_KMAX = 100_000
SQUARE_TRIANGLE_CUTOFF = 1.0e4

#: the strict square/triangle bounds are claimed for lambda above the
#: Faber-Krahn floor of the composite domain, not as lambda -> 0+
SQUARE_TRIANGLE_LAMBDA_MIN = 0.1


def rationalized_polya_constant(dimension: int, exact_volume: PiRational) -> Fraction:
    """(4 pi^2)^d / (omega_d |Omega|)^2 as an exact rational.

    This is the constant c with w_k^d = c * k^2; it is rational exactly
    when the pi powers cancel, which the caller must arrange (e.g. volume
    pi^2/6 in dimension 3 gives 1296).
    """
    c = (PiRational(Fraction(4), 2) ** dimension) / ((omega_d_exact(dimension) * exact_volume) ** 2)
    return c.as_fraction()


def _sphere_product(a, bc: str, cutoff: float):
    interval = sp.interval_spectrum(a, bc, cutoff)
    sphere = sp.sphere2_spectrum(cutoff)
    stream = sp.product_spectrum(interval, sphere, cutoff)
    meta = sp.product_meta(sp.interval_meta(a, bc), sp.sphere2_meta())
    return stream, meta


def _grow_cutoff_for_k(build, k_needed: int, start: float):
    cutoff = start
    for _ in range(8):
        stream, meta = build(cutoff)
        have = stream.total_count - (1 if stream.index_origin == 0 else 0)
        if have >= k_needed:
            return stream, meta
        cutoff *= 1.4
    raise InternalConsistencyError(f"could not cover {k_needed} eigenvalues below {cutoff}")


def empirical_weyl_onset(stream: sp.EigenvalueStream, factor: float) -> float:
    """Smallest onset C1 such that N(lambda) > factor * lambda at every jump
    above C1 (scanned up to the stream cutoff; conditional beyond it)."""
    jumps = stream.values[stream.values > 0]
    counts = np.array([stream.count(v) for v in jumps], float)
    bad = jumps[counts <= factor * jumps]
    return float(bad.max()) if bad.size else float(jumps[0])


def sphere_thin_bundle(k_max: int = SPHERE_THIN_KMAX) -> dict:
    """Exact Polya verification for (0, pi/24) x S^2 plus the large-a failures."""
    # the integer constant, re-derived from the exact volume rather than assumed
    meta_d = sp.product_meta(sp.interval_meta("pi/24", "dirichlet"), sp.sphere2_meta())
    constant = rationalized_polya_constant(3, meta_d.exact_volume)

    weyl_guess = (1.3 * (k_max + 50) / (c_d(3) * meta_d.volume)) ** (2.0 / 3.0)
    stream_d, _ = _grow_cutoff_for_k(
        lambda c: _sphere_product("pi/24", "dirichlet", c), k_max, weyl_guess)
    stream_n, meta_n = _grow_cutoff_for_k(
        lambda c: _sphere_product("pi/24", "neumann", c), k_max, weyl_guess)

    rep_d = pv.verify_exact_power(stream_d, constant.numerator, constant.denominator,
                                  3, k_max, "dirichlet")
    rep_n = pv.verify_exact_power(stream_n, constant.numerator, constant.denominator,
                                  3, k_max, "neumann")
    rep_d_float = pv.verify_dirichlet(stream_d, meta_d, k_max)
    rep_n_float = pv.verify_neumann(stream_n, meta_n, k_max)

    # thresholds behind the a = pi/24 claim
    sphere_stream = sp.sphere2_spectrum(1.0e4)
    onset = empirical_weyl_onset(sphere_stream, factor=c_d(3) * math.pi * 4.0 * math.pi)
    thr_d = threshold_a0(ThresholdRequest(
        ThresholdCase.MANIFOLD_DIRICHLET_D1EQ1_D2EQ2, volume=4.0 * math.pi, c_remainder=1.0))
    thr_n = threshold_a0(ThresholdRequest(
        ThresholdCase.NEUMANN_THIN_D2, volume=4.0 * math.pi, c_remainder=1.0, c1_onset=onset))

    # large-a failure cases, witnessed by the first interval mode pi^2/a^2
    a_fail_d = math.pi
    fail_d_stream, fail_d_meta = _sphere_product(a_fail_d, "dirichlet", 5.0)
    fail_d = pv.verify_dirichlet(fail_d_stream, fail_d_meta, 1)
    a_fail_n = 0.99 * math.sqrt(2.0 / 3.0) * math.pi
    fail_n_stream, fail_n_meta = _sphere_product(a_fail_n, "neumann", 5.0)
    fail_n = pv.verify_neumann(fail_n_stream, fail_n_meta, 1)

    ok = (rep_d.holds and rep_n.holds and rep_d_float.holds and rep_n_float.holds
          and rep_d.checked >= k_max and rep_n.checked >= k_max
          and not fail_d.holds and not fail_n.holds
          and math.pi / 24.0 <= min(thr_d.a0, thr_n.a0))
    return {
        "example": "sphere-thin",
        "ok": ok,
        "integer_constant": {"num": constant.numerator, "den": constant.denominator},
        "dirichlet_exact": rep_d.to_dict(),
        "neumann_exact": rep_n.to_dict(),
        "dirichlet_float": rep_d_float.to_dict(),
        "neumann_float": rep_n_float.to_dict(),
        "threshold_dirichlet": _threshold_dict(thr_d),
        "threshold_neumann": _threshold_dict(thr_n),
        "empirical_weyl_onset": onset,
        "claimed_a": math.pi / 24.0,
        "failure_dirichlet": {"a": a_fail_d, "witness": math.pi ** 2 / a_fail_d ** 2,
                              **fail_d.to_dict()},
        "failure_neumann": {"a": a_fail_n, "witness": math.pi ** 2 / a_fail_n ** 2,
                            **fail_n.to_dict()},
    }


def _threshold_dict(res) -> dict:
    return {
        "case": res.case.value,
        "a0": res.a0,
        "branches": res.branches,
        "binding_branch": res.binding_branch,
        "conditional_on": list(res.conditional_on),
        "complete": res.complete,
    }


def square_bound(lam):
    return 100.0 * lam / (4.0 * math.pi) + 20.0 * np.sqrt(lam)


def triangle_bound(lam):
    return math.sqrt(3.0) * lam / (16.0 * math.pi) + 30.0 * np.sqrt(lam)


def composite_bound(lam):
    return (100.0 + math.sqrt(3.0) / 4.0) * lam / (4.0 * math.pi) + 50.0 * np.sqrt(lam)


def square_triangle_bundle(cutoff: float = SQUARE_TRIANGLE_CUTOFF,
                           threads: Optional[int] = None) -> dict:
    """Counting bounds for the square-with-triangle domain and its threshold."""
    volume = 100.0 + math.sqrt(3.0) / 4.0
    lambda_min = SQUARE_TRIANGLE_LAMBDA_MIN
    # Faber-Krahn: lambda_1 >= 4 pi^2 / (omega_2 |Omega|) = 4 pi / |Omega|,
    # so the Dirichlet count of the composite domain vanishes below the floor
    faber_krahn_floor = 4.0 * math.pi / volume

    square = sp.box_spectrum([10, 10], "neumann", cutoff * 1.0001)
    cf_square = ct.CountingFunction.from_stream(square, sp.box_meta([10, 10], "neumann"))
    triangle = sp.triangle_neumann_spectrum(cutoff * 1.0001)
    cf_triangle = ct.CountingFunction.from_stream(triangle, sp.triangle_meta())
    cf_sum = ct.SumCountingFunction([cf_square, cf_triangle])

    def scan_square():
        return pv.verify_counting_bound(cf_square, square_bound, "upper",
                                        lambda_min=lambda_min, lambda_max=cutoff)

    def scan_triangle():
        return pv.verify_counting_bound(cf_triangle, triangle_bound, "upper",
                                        lambda_min=lambda_min, lambda_max=cutoff)

    def scan_composite():
        return pv.verify_counting_bound(cf_sum, composite_bound, "upper",
                                        lambda_min=lambda_min, lambda_max=cutoff,
                                        jumps=cf_sum.jump_values())

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            f1 = pool.submit(scan_square)
            f2 = pool.submit(scan_triangle)
            f3 = pool.submit(scan_composite)
            rep_square, rep_triangle, rep_sum = f1.result(), f2.result(), f3.result()
    else:
        rep_square, rep_triangle, rep_sum = scan_square(), scan_triangle(), scan_composite()

    thr = threshold_a0(ThresholdRequest(
        ThresholdCase.DIRICHLET_THIN_D2, volume=volume, c_remainder=50.0))
    target = 1.0 / (4.0 * math.pi)
    ok = (rep_square.holds and rep_triangle.holds and rep_sum.holds
          and faber_krahn_floor > lambda_min and thr.a0 >= target)
    return {
        "example": "square-triangle",
        "ok": ok,
        "volume": volume,
        "lambda_min": lambda_min,
        "faber_krahn_floor": faber_krahn_floor,
        "square_scan": rep_square.to_dict(),
        "triangle_scan": rep_triangle.to_dict(),
        "composite_scan": rep_sum.to_dict(),
        "remainder_constant": 50.0,
        "threshold": _threshold_dict(thr),
        "claimed_a": target,
        "threshold_covers_claim": thr.a0 >= target,
    }
