#!/usr/bin/env python3
"""
Sum-product growth: a set of units cannot be additively and
multiplicatively structured at the same time.

For A inside the unit group of Z_27 the bound says

    max(|A+A|, |A*A|)^2 * something >= |A|^3 / 2   (up to the exact form)

so at least one of A+A, A*A must be large.  The demo tries three shapes
of A: a geometric progression (multiplicatively closed), an arithmetic
progression of units (additively closed), and a random set (neither),
and prints which side blows up.  It then runs the packaged checks,
whose reports carry the exact integer inequality.
"""

from fractions import Fraction

from fvrlab import (RSet, check_plunnecke_corollary, check_sum_square,
                    parse_ring_spec, prodset, sumset)
from fvrlab.sampling import sample_subset, sample_unit_subset

ring = parse_ring_spec("zpr:p=3,r=3")

geometric = RSet.from_indices(ring, sorted({ring.pow(2, k) for k in range(9)}))
arithmetic = RSet.from_indices(ring, [1, 4, 7, 10, 13, 16, 19, 22, 25])
random_set = sample_unit_subset(ring, 9, trial_seed=4242)

for label, A in (("geometric <2>", geometric),
                 ("arithmetic 1+3k", arithmetic),
                 ("random units", random_set)):
    plus = sumset(A, A)
    times = prodset(A, A)
    print(f"{label:16s} |A| = {len(A.members):2d}  "
          f"|A+A| = {len(plus.members):2d}  |A*A| = {len(times.members):2d}")

print()
# The formal statements gate on |A|^3 >= q^(3r-1) (here 3^8, so 19 of
# the 27 elements); below the gate the verdict is hypothesis_not_met.
A = sample_subset(ring, 20, trial_seed=4242)
for rep in (check_sum_square(A), check_plunnecke_corollary(A)):
    print(f"{rep.theorem}: verdict {rep.verdict}, ratio {rep.ratio}"
          + (f" = {float(Fraction(rep.ratio)):.3f}" if rep.ratio else ""))
    for row in rep.hypotheses:
        print(f"  {row.name}: {row.lhs} vs {row.rhs} -> {row.ok}")
