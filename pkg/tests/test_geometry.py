"""Collinearity, grid triple counts, and line counts over R x R."""

from itertools import product

import pytest

from fvrlab.geometry import (
    count_collinear_triples,
    count_collinear_triples_weak,
    count_lines,
    geometry_bound_report,
    grid_lines,
    is_collinear,
    is_collinear_weak,
    line_count_report,
    line_through,
)
from fvrlab.ring import make_ring
from fvrlab.sampling import mix64, sample_subset
from fvrlab.setalg import RSet, dilate, translate

from oracles import brute_collinear_triples, brute_is_collinear, brute_lines


@pytest.fixture(scope="module")
def z3():
    return make_ring("zpr", 3, r=1)


def grid_points(A):
    return [(a, b) for a in A.indices() for b in A.indices()]


def test_line_through_sizes(z9):
    full = line_through(z9, (0, 0), (1, 0))
    assert len(full) == 9
    assert full.points == tuple((k, 0) for k in range(9))
    short = line_through(z9, (0, 0), (3, 0))
    # direction (3, 0) is annihilated by multiples of 3, so the orbit is small
    assert short.points == ((0, 0), (3, 0), (6, 0))
    with pytest.raises(ValueError, match="distinct"):
        line_through(z9, (2, 5), (2, 5))


def test_collinear_examples(z9):
    assert is_collinear(z9, (0, 0), (1, 1), (2, 2))
    assert is_collinear(z9, (5, 7), (5, 7), (1, 2))
    assert not is_collinear(z9, (1, 0), (0, 0), (0, 1))
    # cross products vanish here, yet no scalar k works
    assert is_collinear_weak(z9, (3, 0), (0, 0), (0, 3))
    assert not is_collinear(z9, (3, 0), (0, 0), (0, 3))


def test_collinear_matches_search(z9, f3x2):
    for ring in (z9, f3x2):
        pts = [(0, 0), (1, 2), (3, 6), (4, 8), (2, 4)]
        for p1, p2, p3 in product(pts, repeat=3):
            want = brute_is_collinear(ring, p1, p2, p3)
            assert is_collinear(ring, p1, p2, p3) == want
            if want:
                assert is_collinear_weak(ring, p1, p2, p3)


def test_triples_frozen_z3(z3):
    A = RSet.from_indices(z3, [0, 1])
    # 16 triples with P1 = P2, 12 with P3 = P1 != P2, none in general position
    assert count_collinear_triples(A) == 28
    assert count_collinear_triples(RSet.full(z3)) == 225


def test_lines_frozen_z3(z3):
    A = RSet.from_indices(z3, [0, 1])
    assert count_lines(A) == 12 - 6  # 6 of the 12 affine lines are spanned
    lines = grid_lines(A)
    assert len(lines) == 6
    assert all(len(l) == 3 for l in lines)
    assert lines == sorted(lines, key=lambda l: l.points)
    want = {frozenset(l) for l in brute_lines(z3, grid_points(A))}
    assert {frozenset(l.points) for l in lines} == want
    assert count_lines(RSet.full(z3)) == 12


def test_counts_match_brute(all_rings):
    for ring in all_rings:
        A = sample_subset(ring, 3, mix64(71, ring.order))
        pts = grid_points(A)
        assert count_collinear_triples(A) == brute_collinear_triples(ring, pts)
        assert count_lines(A) == len(brute_lines(ring, pts))


def test_weak_count_dominates(z9, f9):
    for ring, size in [(z9, 4), (f9, 3)]:
        A = sample_subset(ring, size, mix64(72, ring.order))
        strict = count_collinear_triples(A)
        weak = count_collinear_triples_weak(A)
        assert strict <= weak
        pts = grid_points(A)
        want = sum(
            1
            for p1, p2, p3 in product(pts, repeat=3)
            if is_collinear_weak(ring, p1, p2, p3)
        )
        assert weak == want


def test_invariance_under_affine_maps(z9):
    A = RSet.from_indices(z9, [0, 1, 5])
    t = count_collinear_triples(A)
    l = count_lines(A)
    assert count_collinear_triples(translate(A, 7)) == t
    assert count_lines(translate(A, 7)) == l
    assert count_collinear_triples(dilate(A, 4)) == t
    assert count_lines(dilate(A, 4)) == l


def test_geometry_bound_report_frozen(z3):
    A = RSet.from_indices(z3, [0, 1])
    rep = geometry_bound_report(A, seed=3)
    assert rep.theorem == "T7_1"
    assert rep.verdict == "pass"
    assert rep.lhs == 3 * 28
    assert rep.rhs == 9 * 8 + 64 + 2 * 3 * 16
    rows = {h.name: h for h in rep.hypotheses}
    assert rows["form_weak_relaxation"].ok
    assert rows["form_pair_coverage"].lhs == 16
    assert rows["form_pair_coverage"].rhs == 24
    assert rows["form_pair_coverage"].ok
    assert rows["form_line_bound"].lhs == 54
    assert rows["form_line_bound"].rhs == 64
    assert rep.sets["triples"] == "28"
    assert rep.sets["lines"] == "6"
    assert rep.sets["sum_nl_sq"] == "24"


def test_geometry_bound_report_singleton(z3):
    A = RSet.from_indices(z3, [2])
    rep = geometry_bound_report(A)
    # the only collinear triple is the point repeated three times
    assert rep.lhs == 3
    assert rep.verdict == "pass"
    assert "lines" not in rep.sets


def test_line_count_report(z3):
    A = RSet.from_indices(z3, [0, 1])
    rep = line_count_report(A, seed=11)
    assert rep.verdict == "ratio_recorded"
    assert rep.lhs == 54 and rep.rhs == 64
    assert float(rep.ratio) == 0.84375
    single = line_count_report(RSet.from_indices(z3, [1]))
    assert single.verdict == "hypothesis_not_met"
    assert single.ratio is None
    assert not single.gates_ok


def test_bound_reports_on_samples(z27, z25, f3x2):
    for ring in (z27, z25, f3x2):
        A = sample_subset(ring, 4, mix64(73, ring.order))
        rep = geometry_bound_report(A)
        assert rep.verdict == "pass"
        lrep = line_count_report(A)
        assert lrep.verdict == "ratio_recorded"
        assert lrep.ratio is not None


def test_geometry_errors(z3):
    with pytest.raises(ValueError, match="nonempty"):
        count_collinear_triples(RSet.from_indices(z3, []))
    with pytest.raises(ValueError, match="nonempty"):
        geometry_bound_report(RSet.from_indices(z3, []))
    with pytest.raises(ValueError, match=">= 2"):
        count_lines(RSet.from_indices(z3, [0]))
