"""Closed-form constants, extremal infima, and thinness thresholds.

Run:  python demos/04_constants_and_thresholds.py
"""

import math

from polyaspec import (
    ThresholdCase,
    ThresholdRequest,
    c_d,
    check_lemma42,
    fd_integral,
    h1,
    h2,
    l_gamma_d,
    omega_d,
    threshold_a0,
)

print("=== Weyl and Riesz constants (exact half-integer Gamma evaluation) ===")
for d in (1, 2, 3, 4):
    print(f"  d = {d}: omega_d = {omega_d(d):.10f}, C_d = {c_d(d):.10f}, "
          f"L_(1,d) = {l_gamma_d(1.0, d):.10f}")
print("identity check: C_2 * L_(1,1) =", c_d(2) * l_gamma_d(1.0, 1), "= C_3 =", c_d(3))

print()
print("=== profile integral in closed form ===")
print("d=2, a=pi, lambda=1:", fd_integral(2, math.pi, 1.0), "(= 2/3)")

print()
print("=== interval mode-sum bounds ===")
r = check_lemma42(math.pi, 1.0)
print(f"a = pi, lambda = 1: sum over l>=1 is {r.sum_from_one} <= {r.upper_bound:.6f}")
print(f"                    sum over l>=0 is {r.sum_from_zero} >= {r.lower_bound:.6f}")

print()
print("=== extremal infima behind the d >= 3 thresholds ===")
for d in (3, 4, 5):
    r1, r2 = h1(d), h2(d)
    print(f"  d = {d}: H1 = {r1.value:.9f} at mu = {r1.mu:.6f};  "
          f"H2 = {r2.value:.9f} at mu = {r2.mu:.6f}")

print()
print("=== thinness thresholds with their min-decomposition ===")
res = threshold_a0(ThresholdRequest(
    ThresholdCase.MANIFOLD_DIRICHLET_D1EQ1_D2EQ2, volume=4 * math.pi, c_remainder=1.0))
print("thin interval x 2-sphere, Dirichlet:")
for name, value in res.branches.items():
    print(f"  {name}: {value:.6f}")
print(f"  a0 = {res.a0} (binding: {res.binding_branch})")

res = threshold_a0(ThresholdRequest(
    ThresholdCase.NEUMANN_THIN_D2, volume=4 * math.pi, c_remainder=1.0, c1_onset=6.0))
print("thin interval x 2-sphere, Neumann (onset constant 6 from a jump scan):")
for name, value in res.branches.items():
    print(f"  {name}: {value:.6f}")
print(f"  a0 = {res.a0:.6f} = pi/24 = {math.pi / 24:.6f}")
print(f"  conditional on: {', '.join(res.conditional_on)}")

res = threshold_a0(ThresholdRequest(
    ThresholdCase.NEUMANN_THIN_D3PLUS, volume=1.0, c_remainder=1.0,
    c1_onset=10.0, dimension=3))
print("thin interval x unit-volume 3-D cross-section, Neumann:")
for name, value in res.branches.items():
    print(f"  {name}: {value:.8f}")
print(f"  a0 = {res.a0:.8f} (binding: {res.binding_branch})")
