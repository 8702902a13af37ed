import math

import numpy as np
import pytest

from polyaspec import (
    ConfigError,
    CoverageError,
    DomainError,
    ModeError,
    berezin_margin,
    box_meta,
    box_spectrum,
    interval_meta,
    interval_spectrum,
    kroger_check,
    l_gamma_d,
    laptev_neumann_margin,
    li_yau_checks,
    riesz_mean,
    riesz_mean_many,
    sphere2_meta,
    sphere2_spectrum,
    two_term_riesz_scan,
    window_infimum_dirichlet,
    window_infimum_neumann,
    window_supremum_neumann,
)

PI = math.pi
PI2 = math.pi ** 2


# ---------------------------------------------------------------------------
# riesz_mean


def test_riesz_mean_sphere():
    s = sphere2_spectrum(10)
    assert riesz_mean(s, 1.0, 6.0) == pytest.approx(1 * 6 + 3 * 4)


def test_riesz_mean_gamma_zero_is_count(rng):
    s = box_spectrum([1, 2], "neumann", 300.0)
    for lam in rng.uniform(0.5, 300.0, 40):
        assert riesz_mean(s, 0.0, lam) == s.count(lam)


def test_riesz_mean_single_term():
    s = interval_spectrum(1, "dirichlet", 50.0)
    assert riesz_mean(s, 1.0, PI2 + 1.0) == pytest.approx(1.0)


def test_riesz_mean_many_matches_scalar(rng):
    s = box_spectrum([1, 1], "dirichlet", 400.0)
    lams = rng.uniform(1.0, 400.0, 600)
    vec = riesz_mean_many(s, 1.5, lams)
    for lam, v in zip(lams[:50], vec[:50]):
        assert v == pytest.approx(riesz_mean(s, 1.5, lam), rel=1e-12)


def test_riesz_mean_range_and_domain_errors():
    s = sphere2_spectrum(10)
    with pytest.raises(CoverageError):
        riesz_mean(s, 1.0, 11.0)
    with pytest.raises(DomainError):
        riesz_mean(s, -0.5, 5.0)


def test_riesz_mean_derivative_is_gamma_times_lower_order(rng):
    s = box_spectrum([1, 1], "dirichlet", 500.0)
    checked = 0
    for lam in rng.uniform(25.0, 450.0, 200):
        step = 1e-5 * lam
        # keep the difference quotient away from kinks
        if np.any(np.abs(s.values - lam) < 2 * step):
            continue
        for gamma in (1.0, 1.5, 2.0):
            fd = (riesz_mean(s, gamma, lam + step) - riesz_mean(s, gamma, lam - step)) / (2 * step)
            analytic = gamma * riesz_mean(s, gamma - 1.0, lam)
            assert abs(fd - analytic) / analytic < 1e-6
        checked += 1
    assert checked >= 100


def test_riesz_mean_log_convex_in_gamma():
    s = box_spectrum([1, 2], "dirichlet", 300.0)
    lam = 1.0 + float(s.values.max())
    for g1, g2 in ((1.0, 2.0), (1.5, 3.0), (2.0, 5.0)):
        mid = riesz_mean(s, (g1 + g2) / 2.0, lam)
        assert mid ** 2 <= riesz_mean(s, g1, lam) * riesz_mean(s, g2, lam) * (1 + 1e-12)


# ---------------------------------------------------------------------------
# one-term bounds (theorems; negative margins are bugs)


def test_berezin_margin_examples():
    s = box_spectrum([1, 1], "dirichlet", 200.0)
    meta = box_meta([1, 1], "dirichlet")
    assert berezin_margin(s, meta, 1.0, 100.0) >= 0.0
    # below the first eigenvalue the sum is empty and the margin is the bound
    lam = 1.0
    assert berezin_margin(s, meta, 1.0, lam) == pytest.approx(
        l_gamma_d(1.0, 2) * 1.0 * lam ** 2)
    si = interval_spectrum(1, "dirichlet", 1.1e4)
    assert berezin_margin(si, interval_meta(1, "dirichlet"), 1.0, 1e4) >= 0.0


def test_berezin_requires_gamma_ge_1_and_dirichlet():
    s = box_spectrum([1, 1], "dirichlet", 50.0)
    meta = box_meta([1, 1], "dirichlet")
    with pytest.raises(DomainError):
        berezin_margin(s, meta, 0.5, 10.0)
    with pytest.raises(ModeError):
        berezin_margin(s, box_meta([1, 1], "neumann"), 1.0, 10.0)


def test_laptev_margin_examples():
    sn = box_spectrum([1, 1], "neumann", 200.0)
    meta = box_meta([1, 1], "neumann")
    assert laptev_neumann_margin(sn, meta, 1.0, 100.0) >= 0.0
    # as lambda -> 0+ only the zero mode contributes: margin ~ lam^g - O(lam^(g+d/2))
    lam = 1e-6
    m = laptev_neumann_margin(sn, meta, 1.0, lam)
    assert 0.0 < m < lam * 1.000001
    b12 = box_spectrum([1, 2], "neumann", 100.0)
    assert laptev_neumann_margin(b12, box_meta([1, 2], "neumann"), 1.5, 50.0) >= 0.0


def test_one_term_margins_at_all_jumps(unit_square_dirichlet, unit_square_neumann,
                                       box12_dirichlet, box12_neumann):
    for (s, meta) in (unit_square_dirichlet, box12_dirichlet):
        lams = s.values[s.values <= 1e3]
        for gamma in (1.0, 1.5, 2.0):
            bound = l_gamma_d(gamma, 2) * meta.volume * lams ** (gamma + 1.0)
            margins = bound - riesz_mean_many(s, gamma, lams)
            assert margins.min() >= 0.0
    for (s, meta) in (unit_square_neumann, box12_neumann):
        lams = s.values[(s.values > 0) & (s.values <= 1e3)]
        for gamma in (1.0, 1.5, 2.0):
            bound = l_gamma_d(gamma, 2) * meta.volume * lams ** (gamma + 1.0)
            margins = riesz_mean_many(s, gamma, lams) - bound
            assert margins.min() >= 0.0


# ---------------------------------------------------------------------------
# Li-Yau and Kroger


def test_li_yau_unit_square_first_mode():
    s = box_spectrum([1, 1], "dirichlet", 100.0)
    meta = box_meta([1, 1], "dirichlet")
    sum_margin, eigen_margin = li_yau_checks(s, meta, 1)
    assert sum_margin == pytest.approx(2 * PI2 - 0.5 * 4 * PI2 / PI)
    assert eigen_margin == pytest.approx(sum_margin)
    assert sum_margin > 0


def test_li_yau_interval_first_mode():
    s = interval_spectrum(1, "dirichlet", 100.0)
    meta = interval_meta(1, "dirichlet")
    _, eigen_margin = li_yau_checks(s, meta, 1)
    assert eigen_margin == pytest.approx(PI2 - PI2 / 3.0)


def test_li_yau_scaling_leaves_margin_sign_invariant():
    for scale in (0.5, 1.0, 2.0):
        s = box_spectrum([scale, scale], "dirichlet", 400.0 / scale ** 2)
        meta = box_meta([scale, scale], "dirichlet")
        for k in (1, 3, 7):
            sm, em = li_yau_checks(s, meta, k)
            assert sm > 0 and em > 0


def test_li_yau_insufficient_eigenvalues():
    s = interval_spectrum(1, "dirichlet", 50.0)
    with pytest.raises(CoverageError):
        li_yau_checks(s, interval_meta(1, "dirichlet"), 10)


def test_kroger_unit_square_first_mode():
    s = box_spectrum([1, 1], "neumann", 100.0)
    meta = box_meta([1, 1], "neumann")
    assert kroger_check(s, meta, 1) == pytest.approx(8.0 * PI - PI2)


def test_kroger_rejects_closed_and_needs_zero_mode():
    s = sphere2_spectrum(100.0)
    with pytest.raises(ModeError):
        kroger_check(s, sphere2_meta(), 1)


def test_kroger_cube_k5():
    s = box_spectrum([1, 1, 1], "neumann", 300.0)
    assert kroger_check(s, box_meta([1, 1, 1], "neumann"), 5) >= 0.0


def test_kroger_range_error():
    s = box_spectrum([1, 1], "neumann", 15.0)
    with pytest.raises(CoverageError):
        kroger_check(s, box_meta([1, 1], "neumann"), 100)


# ---------------------------------------------------------------------------
# two-term Riesz scans


def test_two_term_scan_square_dirichlet():
    s = box_spectrum([1, 1], "dirichlet", 1.1e4)
    meta = box_meta([1, 1], "dirichlet")
    scan = two_term_riesz_scan(s, meta, 1.0, 1e4, "dirichlet")
    assert scan.lambda_star is not None
    tail = [m for (lam, _, _, m) in scan.points if lam >= scan.lambda_star]
    assert all(m >= 0 for m in tail)
    assert scan.points[-1][3] >= 0


def test_two_term_scan_box_neumann():
    s = box_spectrum([1, 2], "neumann", 1.1e4)
    meta = box_meta([1, 2], "neumann")
    scan = two_term_riesz_scan(s, meta, 1.0, 1e4, "neumann")
    assert scan.lambda_star is not None
    assert scan.points[-1][3] >= 0


def test_two_term_scan_requires_surface_area():
    s = sphere2_spectrum(100.0)
    from polyaspec.spectra import DomainMeta

    meta = DomainMeta(2, 4 * PI, "dirichlet")
    with pytest.raises(ConfigError):
        two_term_riesz_scan(s, meta, 1.0, 50.0, "dirichlet")


def test_two_term_scan_small_lambda_reported_not_asserted():
    s = box_spectrum([1, 1], "neumann", 100.0)
    meta = box_meta([1, 1], "neumann")
    scan = two_term_riesz_scan(s, meta, 1.0, 50.0, "neumann")
    # margins near zero exist (the zero mode region); they are data, not failures
    assert isinstance(scan.worst_margin, float)


# ---------------------------------------------------------------------------
# window scans for the product-argument gap constants


def test_window_infimum_dirichlet_positive_for_square():
    s = box_spectrum([1, 1], "dirichlet", 150.0)
    meta = box_meta([1, 1], "dirichlet")
    scan = window_infimum_dirichlet(s, meta, d2=2, window=(2 * PI2, 100.0))
    assert scan.value > 0.0
    assert 2 * PI2 <= scan.mu <= 100.0


def test_window_infimum_neumann_positive_for_square():
    s = box_spectrum([1, 1], "neumann", 150.0)
    meta = box_meta([1, 1], "neumann")
    scan = window_infimum_neumann(s, meta, d2=2, window=(PI2, 100.0))
    assert scan.value > 0.0


def test_window_supremum_neumann_finite():
    s = box_spectrum([1, 1], "neumann", 150.0)
    meta = box_meta([1, 1], "neumann")
    scan = window_supremum_neumann(s, meta, d2=2, window=(PI2, 100.0))
    assert scan.value > 0.0
    assert math.isfinite(scan.value)


def test_window_scan_coverage_error():
    s = box_spectrum([1, 1], "neumann", 50.0)
    meta = box_meta([1, 1], "neumann")
    with pytest.raises(CoverageError):
        window_supremum_neumann(s, meta, d2=2, window=(1.0, 100.0))
