import io
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyaspec import (
    CoverageError,
    DomainError,
    ModeError,
    ValidationError,
    box_spectrum,
    interval_spectrum,
    product_spectrum,
    sphere2_spectrum,
    stream_from_csv,
    stream_from_json_dict,
    stream_to_csv,
    stream_to_json_dict,
    tabulated_spectrum,
    triangle_neumann_counting,
    triangle_neumann_spectrum,
)
from polyaspec.spectra import DomainMeta

PI2 = math.pi ** 2
TRI_FIRST_NONZERO = 16.0 * PI2 / 9.0


# ---------------------------------------------------------------------------
# interval


def test_interval_dirichlet_unit():
    s = interval_spectrum(1, "dirichlet", 50)
    assert np.allclose(s.values, [PI2, 4 * PI2])
    assert list(s.multiplicities) == [1, 1]
    assert s.index_origin == 1


def test_interval_neumann_zero_mode_only():
    s = interval_spectrum(1, "neumann", 1)
    assert list(s.values) == [0.0]
    assert s.index_origin == 0


def test_interval_pi_over_24_is_exact_integers():
    s = interval_spectrum("pi/24", "dirichlet", 1e4)
    assert list(s.values) == [576.0, 2304.0, 5184.0, 9216.0]
    assert s.exact and s.pi_power == 0
    assert s.exact_entries == (Fraction(576), Fraction(2304), Fraction(5184), Fraction(9216))


def test_interval_float_length_is_inexact():
    s = interval_spectrum(0.1308996938995747, "dirichlet", 1e4)
    assert not s.exact


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_interval_rejects_nonpositive_length(bad):
    with pytest.raises(DomainError):
        interval_spectrum(bad, "dirichlet", 10.0)


def test_interval_rejects_nonpositive_cutoff():
    with pytest.raises(DomainError):
        interval_spectrum(1.0, "dirichlet", 0.0)


@settings(max_examples=60, deadline=None)
@given(a=st.floats(0.2, 5.0), lam_top=st.floats(5.0, 500.0),
       bc=st.sampled_from(["dirichlet", "neumann"]))
def test_interval_matches_brute_force(a, lam_top, bc):
    s = interval_spectrum(a, bc, lam_top)
    start = 1 if bc == "dirichlet" else 0
    brute = [l * l * PI2 / a ** 2 for l in range(start, 200)
             if l * l * PI2 / a ** 2 < lam_top]
    # evaluation order may differ by one ulp between the exact and naive paths
    assert len(s.values) == len(brute)
    assert np.allclose(s.values, brute, rtol=1e-14, atol=0.0)
    assert all(m == 1 for m in s.multiplicities)


# ---------------------------------------------------------------------------
# box


def test_box_neumann_side10_lattice_counts():
    s = box_spectrum([10, 10], "neumann", PI2 / 100 * 5 + 1e-9)
    expected = [(0.0, 1), (PI2 / 100, 2), (2 * PI2 / 100, 1),
                (4 * PI2 / 100, 2), (5 * PI2 / 100, 2)]
    got = list(s.entries())
    assert [m for _, m in got] == [m for _, m in expected]
    assert np.allclose([v for v, _ in got], [v for v, _ in expected])


def test_box_single_side_equals_interval():
    sb = box_spectrum([1], "dirichlet", 300.0)
    si = interval_spectrum(1, "dirichlet", 300.0)
    assert list(sb.values) == list(si.values)
    assert list(sb.multiplicities) == list(si.multiplicities)
    assert sb.exact_entries == si.exact_entries


def test_box_unit_square_first_mode_only():
    s = box_spectrum([1, 1], "dirichlet", 3 * PI2)
    assert list(s.entries()) == [(2 * PI2, 1)]


def test_box_rejects_empty_sides():
    with pytest.raises(DomainError):
        box_spectrum([], "dirichlet", 10.0)


def test_box_multiplicity_aggregation_brute_force():
    cutoff = 200.0
    s = box_spectrum([1, 2], "neumann", cutoff)
    table = {}
    for m in range(0, 20):
        for n in range(0, 40):
            v = PI2 * (m * m + n * n / 4.0)
            if v < cutoff:
                table[round(v, 9)] = table.get(round(v, 9), 0) + 1
    assert sorted(table.keys()) == [round(v, 9) for v in s.values]
    assert [table[round(v, 9)] for v in s.values] == list(s.multiplicities)


def test_box_irrational_sides_take_float_path():
    s = box_spectrum([math.sqrt(2), 1.3217], "dirichlet", 100.0)
    assert not s.exact
    assert np.all(np.diff(s.values) > 0)


# ---------------------------------------------------------------------------
# sphere


def test_sphere_low_cutoffs():
    s = sphere2_spectrum(6)
    assert list(s.entries()) == [(0.0, 1), (2.0, 3)]
    assert s.count(6.0) == 4
    assert list(sphere2_spectrum(0.5).entries()) == [(0.0, 1)]
    assert sphere2_spectrum(43).count(43.0) == 49


def test_sphere_counting_identity_k_up_to_100():
    s = sphere2_spectrum(102 * 103)
    for k in range(0, 101):
        lam = k * (k + 1)
        assert s.count(float(lam)) == k * k
        assert s.count(lam + 1e-9) == (k + 1) ** 2


# ---------------------------------------------------------------------------
# triangle


def test_triangle_count_at_one():
    assert triangle_neumann_counting(1.0) == 1


def test_triangle_first_nonzero_eigenvalue():
    before = triangle_neumann_counting(TRI_FIRST_NONZERO)
    after = triangle_neumann_counting(TRI_FIRST_NONZERO + 1e-6)
    assert before == 1
    assert after > before


def test_triangle_flat_below_first_nonzero():
    for lam in (1e-6, 0.5, 5.0, TRI_FIRST_NONZERO * 0.999):
        assert triangle_neumann_counting(lam) == 1


def test_triangle_weyl_ratio_at_1e6():
    lam = 1e6
    target = math.sqrt(3) / (16 * math.pi)
    assert abs(triangle_neumann_counting(lam) / lam - target) / target < 0.02


def test_triangle_rejects_nonpositive():
    with pytest.raises(DomainError):
        triangle_neumann_counting(0.0)


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.floats(0.5, 400.0), st.floats(0.5, 400.0)))
def test_triangle_counting_nondecreasing_integer(lams):
    lo, hi = sorted(lams)
    n_lo, n_hi = triangle_neumann_counting(lo), triangle_neumann_counting(hi)
    assert isinstance(n_lo, int) and isinstance(n_hi, int)
    assert n_lo <= n_hi


def test_triangle_stream_agrees_with_closed_form(rng):
    cutoff = 500.0
    stream = triangle_neumann_spectrum(cutoff)
    for lam in rng.uniform(0.1, cutoff, 50):
        assert stream.count(lam) == triangle_neumann_counting(lam)


def test_triangle_stream_is_exact_pi_squared_scale():
    stream = triangle_neumann_spectrum(100.0)
    assert stream.exact and stream.pi_power == 2
    assert stream.exact_entries[0] == 0
    assert stream.exact_entries[1] == Fraction(16, 9)  # times pi^2


# ---------------------------------------------------------------------------
# product


def test_product_thin_sphere_head():
    s1 = interval_spectrum("pi/24", "dirichlet", 600)
    s2 = sphere2_spectrum(600)
    p = product_spectrum(s1, s2, 600)
    assert list(p.entries()) == [(576.0, 1), (578.0, 3), (582.0, 5), (588.0, 7), (596.0, 9)]
    assert p.exact


def test_product_zero_identity():
    zero = tabulated_spectrum([(0, 1)], 1e3, DomainMeta(1, 1.0, "neumann"))
    s2 = sphere2_spectrum(1e3)
    p = product_spectrum(zero, s2, 400.0)
    t = s2.truncated(400.0)
    assert list(p.values) == list(t.values)
    assert list(p.multiplicities) == list(t.multiplicities)


def test_product_interval_squared_is_square():
    s1 = interval_spectrum(1, "dirichlet", 9 * PI2)
    p = product_spectrum(s1, s1, 9 * PI2)
    assert np.allclose(p.values, [2 * PI2, 5 * PI2, 8 * PI2])
    assert list(p.multiplicities) == [1, 2, 1]
    direct = box_spectrum([1, 1], "dirichlet", 9 * PI2)
    assert list(p.values) == list(direct.values)
    assert list(p.multiplicities) == list(direct.multiplicities)


def test_product_requires_covering_cutoffs():
    s1 = interval_spectrum(1, "dirichlet", 10.0)
    s2 = sphere2_spectrum(100.0)
    with pytest.raises(CoverageError):
        product_spectrum(s1, s2, 50.0)


def _multiset(stream):
    return [(round(v, 10), int(m)) for v, m in stream.entries()]


def test_product_commutative_and_associative():
    cutoff = 120.0
    a = interval_spectrum(1.7, "neumann", cutoff)
    b = sphere2_spectrum(cutoff)
    c = interval_spectrum(0.9, "dirichlet", cutoff)
    ab = product_spectrum(a, b, cutoff)
    ba = product_spectrum(b, a, cutoff)
    assert _multiset(ab) == _multiset(ba)
    ab_c = product_spectrum(product_spectrum(a, b, cutoff), c, cutoff)
    a_bc = product_spectrum(a, product_spectrum(b, c, cutoff), cutoff)
    assert _multiset(ab_c) == _multiset(a_bc)


def test_product_counting_matches_double_loop(rng):
    cutoff = 300.0
    s1 = interval_spectrum(1.3, "dirichlet", cutoff)
    s2 = sphere2_spectrum(cutoff)
    p = product_spectrum(s1, s2, cutoff)
    v1, v2 = s1.expanded(), s2.expanded()
    pair_sums = np.sort((v1[:, None] + v2[None, :]).ravel())
    for lam in rng.uniform(1.0, cutoff, 200):
        assert p.count(lam) == int(np.searchsorted(pair_sums, lam, side="left"))


def test_product_mixed_scales_is_inexact():
    s1 = interval_spectrum(1, "dirichlet", 100.0)  # exact in units of pi^2
    s2 = sphere2_spectrum(100.0)                   # exact integers
    p = product_spectrum(s1, s2, 100.0)
    assert s1.exact and s2.exact and not p.exact


# ---------------------------------------------------------------------------
# tabulated + serialization


def test_tabulated_matches_sphere():
    t = tabulated_spectrum([(0, 1), (2, 3)], 6.0)
    s = sphere2_spectrum(6.0)
    assert list(t.values) == list(s.values)
    assert list(t.multiplicities) == list(s.multiplicities)
    assert t.exact


def test_tabulated_rejects_duplicates():
    with pytest.raises(ValidationError):
        tabulated_spectrum([(1, 1), (1, 1)], 10.0)


def test_tabulated_rejects_unsorted_and_negative():
    with pytest.raises(ValidationError):
        tabulated_spectrum([(2, 1), (1, 1)], 10.0)
    with pytest.raises(ValidationError):
        tabulated_spectrum([(-1, 1), (1, 1)], 10.0)


def test_tabulated_empty_is_dirichlet_like():
    t = tabulated_spectrum([], 1.0)
    assert t.index_origin == 1
    assert t.count(1.0) == 0
    with pytest.raises(ModeError):
        tabulated_spectrum([], 1.0, DomainMeta(1, 1.0, "neumann"))


def test_tabulated_bc_mismatch():
    with pytest.raises(ModeError):
        tabulated_spectrum([(1, 1)], 10.0, DomainMeta(2, 1.0, "neumann"))
    with pytest.raises(ModeError):
        tabulated_spectrum([(0, 1)], 10.0, DomainMeta(2, 1.0, "dirichlet"))


def test_csv_round_trip(rng):
    s = box_spectrum([1.1, 2.3], "neumann", 500.0)
    buf = io.StringIO()
    stream_to_csv(s, buf)
    buf.seek(0)
    back = stream_from_csv(buf, cutoff=s.cutoff)
    assert list(back.values) == list(s.values)
    assert list(back.multiplicities) == list(s.multiplicities)
    for lam in rng.uniform(0.5, 500.0, 100):
        assert back.count(lam) == s.count(lam)


def test_csv_rejects_bad_header():
    with pytest.raises(ValidationError):
        stream_from_csv(io.StringIO("a,b\n1,2\n"))


def test_json_round_trip():
    s = sphere2_spectrum(50.0)
    d = stream_to_json_dict(s)
    assert set(d) == {"cutoff", "exact", "entries"}
    back = stream_from_json_dict(d)
    assert list(back.values) == list(s.values)
    assert list(back.multiplicities) == list(s.multiplicities)


def test_stream_values_are_immutable():
    s = sphere2_spectrum(10.0)
    with pytest.raises(ValueError):
        s.values[0] = 5.0


def test_count_above_cutoff_raises():
    s = sphere2_spectrum(10.0)
    with pytest.raises(CoverageError):
        s.count(11.0)
