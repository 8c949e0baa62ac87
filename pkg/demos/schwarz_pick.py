"""Derivative bounds for a solution with boundary data and a source.

A harmonic self-map of the disk satisfies Colonna's bound on its operator
norm; adding a source and a positive alpha still keeps every check of the
Schwarz-Pick type inequality on the safe side.
"""

import numpy as np

from alphakit import BoundaryData, SourceField, polar_grid, verify_colonna, verify_schwarz_pick

grid = polar_grid(5, 12, 0.95)

data = BoundaryData.from_fourier({1: 0.6, -2: 0.3})
colonna = verify_colonna(data, grid)
print(f"Colonna: passed={colonna.passed}  worst slack={colonna.worst_slack:.4f}")

for alpha in (0.0, 1.0, 2.5):
    rep = verify_schwarz_pick(data, SourceField.monomial(1, 0, 0.4), alpha, grid)
    print(
        f"alpha={alpha}: passed={rep.passed}  worst slack={rep.worst_slack:.4f}"
        f"  max operator norm={rep.details['max_op_norm']:.4f}  checks={rep.details['checks']}"
    )

print("\nJSON report for the last case:")
print(rep.to_json()[:400], "...")
