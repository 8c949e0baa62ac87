"""When does precomposition keep a function alpha-harmonic?

Rotations do.  A dilation does not once the function has an antianalytic
part, and neither does z -> z^2 applied to the explicit Example 1 family.
The residual of the weighted Laplacian tells the cases apart by many orders
of magnitude.
"""

import numpy as np

from alphakit import AlphaHarmonicSeries, Example1Function, PolyMap, polar_grid, verify_composition
from alphakit.analysis import random_series

grid = polar_grid(6, 12, 0.9)
rng = np.random.default_rng(0)

f = random_series(rng, 1.0)
for name, psi in [("rotation by 1.1", PolyMap.rotation(1.1)), ("dilation by 0.5", PolyMap.dilation(0.5))]:
    rep = verify_composition(f, psi, grid)
    print(f"{name:>16}: max residual {rep.details['max_residual']:.3e}  expected alpha-harmonic={rep.details['expected_alpha_harmonic']}")

conj = AlphaHarmonicSeries({-1: 1.0}, 1.0)
rep = verify_composition(conj, PolyMap.dilation(0.5), grid)
print(f"conj(z) o 0.5z  : max residual {rep.details['max_residual']:.6f} at {rep.details['argmax']}")

ex1 = Example1Function(1, 1.0)
punctured = grid[np.abs(grid) > 0.1]
rep = verify_composition(ex1, PolyMap.power(2), punctured)
print(f"Example 1 o z^2 : max residual {rep.details['max_residual']:.6f} at {rep.details['argmax']}")
