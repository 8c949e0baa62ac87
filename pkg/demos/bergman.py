"""Membership of a bounded alpha-harmonic function in a Bergman-type space.

The truncated integrals of (1-|z|^2)^(p+1) Delta(|f|^p) over growing disks
increase and settle, and the limit is finite for every p tried.
"""

from alphakit import AlphaHarmonicSeries, bergman_membership_check

f = AlphaHarmonicSeries({1: 0.3, -1: 0.3}, 1.0)

for p in (2, 3, 4, 6):
    rep = bergman_membership_check(f, p)
    ints = rep.details["truncated_integrals"]
    steps = "  ".join(f"{v:.8f}" for v in ints)
    print(f"p={p}: r=0.9,0.99,0.999 -> {steps}  norm={rep.details['norm']:.6f}  passed={rep.passed}")

print(f"\nC1={rep.details['C1']}, C2={rep.details['C2']}")
print(f"sign hypothesis Re(conj f Delta f) >= 0 holds: {rep.details['hypothesis_holds']}")
