"""The equality case of the Schwarz-type bound.

With zero boundary data and the constant source g = -1 at alpha = 0, the
solution is 1 - |z|^2, and the bound |f(z)| <= ||g|| (1 - |z|^2) is an
equality at every point.  The solver recovers it from quadrature alone.
"""

import numpy as np

from alphakit import BoundaryData, SourceField, delta_alpha_residual, polar_grid, solve, verify_schwarz

g = SourceField.constant(-1.0)
field = solve(None, g, alpha=0.0)
z = polar_grid(4, 8, 0.95)

f = field(z)
print(f"max |f - (1-|z|^2)|       = {np.max(np.abs(f - (1 - np.abs(z) ** 2))):.2e}")
print(f"max |Delta_0 f - g|       = {np.max(np.abs(delta_alpha_residual(field, z, 0.0) + 1)):.2e}")

report = verify_schwarz(BoundaryData.zero(), g, 0.0, z)
print(f"worst slack of the bound  = {report.worst_slack:+.2e}  (zero means sharp)")
print(f"violations                = {len(report.violations)}")

# the same source at alpha = 1 gives a strictly smaller field
f1 = solve(None, g, alpha=1.0)(z)
print(f"alpha=1, max |f|/(1-|z|^2) = {np.max(np.abs(f1) / (1 - np.abs(z) ** 2)):.4f}")
