#!/usr/bin/env python3
"""
Why f(x,y,z) = xy + z is an expander and x + y + z is not.

Takes small subsets A, B, C of Z_27 and compares the image sizes
|f(A,B,C)| for the two polynomials.  Addition keeps structured sets
structured (a progression plus a progression is barely bigger), while
the xy term mixes valuation layers and the image quickly covers a
constant fraction of the ring.
"""

from fvrlab import RSet, check_expander, image_quad3, parse_quadpoly, parse_ring_spec

ring = parse_ring_spec("zpr:p=3,r=3")
mixing = parse_quadpoly(ring, "a=1;R=0,0,0;S=0,0,0;T=0,1,0")  # xy + z

# An arithmetic progression: worst case for additive structure.  Three
# copies of {0..4} only sum to {0..12}, but xy scatters the products.
prog = RSet.from_indices(ring, [0, 1, 2, 3, 4])
sums = {ring.add(ring.add(x, y), z)
        for x in prog.members for y in prog.members for z in prog.members}
img = image_quad3(mixing, prog, prog, prog)
print(f"A = B = C = {prog.literal}  (progression in Z_27)")
print(f"  |A+B+C|   = {len(sums):3d}   still a progression")
print(f"  |A*B + C| = {len(img):3d}   out of {ring.order}")
print()

# The bound: 8 * q^(2r-1) * |f(A,B,C)| >= min(q^(3r-1), |A||B||C|).
big = RSet.from_indices(ring, list(range(18)))
rep = check_expander(mixing, big, big, big)
print(f"A = B = C = first 18 elements: verdict {rep.verdict}, "
      f"{rep.lhs} >= {rep.rhs}, ratio {rep.ratio}")

# A quadratic z-term costs a size gate: |C| >= 2*q^(r-1), because z^2
# folds C onto roughly half as many values.  Small C is gated out.
square = parse_quadpoly(ring, "a=1;R=0,0,0;S=0,0,0;T=1,0,0")  # xy + z^2
for C in (big, prog):
    rep = check_expander(square, big, big, C)
    gate = rep.hypotheses[0]
    print(f"xy + z^2 with |C| = {len(C.members):2d}: verdict {rep.verdict} "
          f"({gate.name}: {gate.lhs} >= {gate.rhs} is {gate.ok})")
