#!/usr/bin/env python3
"""Point-plane incidences vs the main term |P||Q|/q^r, over Z_25."""

from fvrlab import count_incidences, incidence_bound_report, parse_ring_spec
from fvrlab.sampling import sample_planes, sample_points

ring = parse_ring_spec("zpr:p=5,r=2")

# A plane u.x = u4 is incident to the points it contains.  For random
# families the incidence count hugs |P||Q|/q^r; the report bounds the
# deviation by q^(2r-1) * sqrt(|P||Q|) (squared, to stay in integers).
for trial in range(6):
    npts = 40 + 120 * trial
    pts = sample_points(ring, npts, seed=900 + trial)
    pls = sample_planes(ring, npts, seed=700 + trial)
    inc = count_incidences(ring, pts, pls)
    main = npts * npts / ring.order
    rep = incidence_bound_report(ring, pts, pls)
    print(f"|P| = |Q| = {npts:3d}: incidences {inc:5d}, main term {main:8.1f}, "
          f"verdict {rep.verdict}")
