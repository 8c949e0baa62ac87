"""A short tour of the weighted kernels.

The weighted Poisson kernel averages to one over every circle, the
integrated profile h is finite at s = 1 only when alpha > -1, and the Green
function is negative and logarithmic at the pole.  Run with
``python demos/kernels_tour.py``.
"""

import numpy as np

from alphakit import CircleRule, green_alpha, green_alpha_bound, h_alpha, integrate_circle, poisson_kernel_alpha

rule = CircleRule(512)

print("Mean of P_alpha(z e^{-it}) over the circle")
for alpha in (0.0, 0.5, 1.0, 2.5):
    z = 0.8 * np.exp(0.7j)
    mean = integrate_circle(lambda t: poisson_kernel_alpha(z * np.exp(-1j * t), alpha), rule)
    print(f"  alpha={alpha:<4} z={z:.3f}  mean={mean.real:.15f}")

# h(s) = int_0^s t^alpha/(1-t) dt; at alpha = 0 this is -log(1-s)
print("\nProfile h_alpha")
for s in (0.5, 0.9, 0.999):
    print(f"  s={s:<6} h_0={h_alpha(s, 0.0):.12f}  -log(1-s)={-np.log1p(-s):.12f}  h_2={h_alpha(s, 2.0):.12f}")

print("\nGreen function near the pole w = 0.2 (alpha = 1)")
for d in (1e-1, 1e-3, 1e-6):
    z = 0.2 + d
    print(f"  |z-w|={d:.0e}  G={green_alpha(z, 0.2, 1.0).real:+.6f}  bound={green_alpha_bound(z, 0.2, 1.0):.6f}")
