#!/usr/bin/env python3
"""
Collinear triples in the grid A x A.

Three grid points are collinear when their pairwise differences are
parallel, i.e. the 2x2 difference determinant is in enough layers of the
maximal ideal for a genuine line to pass through all three.  A small set
A already forces many accidental triples; the bound caps the count by

    |A|^6 / q^r  +  q^(r-1) * |A|^4      (times an explicit constant)

so a grid can beat the random count only by the ideal-correction term.
"""

from fvrlab import (RSet, count_collinear_triples, count_lines,
                    geometry_bound_report, parse_ring_spec)
from fvrlab.sampling import sample_subset

ring = parse_ring_spec("zpr:p=3,r=2")

# Progressions maximize collinearity: every triple inside one line.
for literal in ("0,1", "0,3,6", "0,1,2,3", "all"):
    A = (RSet.full(ring) if literal == "all"
         else RSet.from_indices(ring, [int(t) for t in literal.split(",")]))
    n = len(A.members)
    triples = count_collinear_triples(A)
    lines = count_lines(A)
    random_rate = n**6 / ring.order  # what a structureless grid would give
    print(f"A = {literal:10s} grid {n}x{n}: triples {triples:7d} "
          f"(random ~{random_rate:9.1f}), distinct lines {lines}")

print()
for t in range(4):
    A = sample_subset(ring, 4, trial_seed=50 + t)
    rep = geometry_bound_report(A)
    print(f"A = {A.literal:12s} verdict {rep.verdict}, ratio {rep.ratio}")
