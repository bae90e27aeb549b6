#!/usr/bin/env python3
"""
A tour of arithmetic in finite valuation rings.

Walks through the two constructible families side by side:

  Z_{p^r}        integers mod a prime power
  F_q[x]/(x^r)   truncated polynomials over a finite field

Both are local rings: a single maximal ideal generated by one element z
(the uniformizer), every element a unit times a power of z, and a
valuation v(a) counting how many factors of z divide a.  The demo prints
the valuation layers, checks the two defining identities v(ab) = v(a)+v(b)
(capped at r) and |ideal(z^k)| = q^(r-k), and solves a few linear
equations m*x = n, which have solutions exactly when v(n) >= v(m).
"""

from fvrlab import Coset, parse_ring_spec

for spec in ("zpr:p=3,r=2", "fqxr:p=3,s=2,r=2"):
    ring = parse_ring_spec(spec)
    print(f"== {ring.spec_string()}  order {ring.order} = {ring.q}^{ring.r}, "
          f"{ring.units_count} units ==")

    # Stratify the ring by valuation: layer k holds the elements divisible
    # by z^k but not z^(k+1).  Layer r is just {0}.
    layers: dict[int, list[int]] = {k: [] for k in range(ring.r + 1)}
    for a in range(ring.order):
        layers[ring.valuation(a)].append(a)
    for k in range(ring.r + 1):
        print(f"  v = {k}: {len(layers[k]):3d} elements")
        assert len(layers[k]) == (1 if k == ring.r
                                  else ring.ideal_size(k) - ring.ideal_size(k + 1))

    # v(ab) = min(v(a) + v(b), r) for every pair.
    for a in range(ring.order):
        for b in range(ring.order):
            got = ring.valuation(ring.mul(a, b))
            assert got == min(ring.valuation(a) + ring.valuation(b), ring.r)
    print("  v(ab) = min(v(a)+v(b), r) holds on all pairs")

    z = ring.uniformizer()
    print(f"  uniformizer z = {z}, z^{ring.r} = {ring.pow(z, ring.r)} (must be 0)")

    # Linear equations.  Units are invertible so u*x = n always solves
    # uniquely; a zero divisor m solves only when v(n) >= v(m), and then
    # the solution set is a coset of the ideal (z^(r - v(m))).
    samples = [(1, 5), (z, 0), (z, z), (z, 1)]
    for m, n in samples:
        sol = ring.solve_linear(m, n)
        if sol is None:
            print(f"  {m}*x = {n}: no solution (v({n}) < v({m}))")
        else:
            assert isinstance(sol, Coset)
            members = sol.members()
            for x in members:
                assert ring.mul(m, x) == n
            print(f"  {m}*x = {n}: {len(members)} solution(s) {members}")
    print()
