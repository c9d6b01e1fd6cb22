import random
from collections import Counter
from dataclasses import replace

import pytest

from ribbonlift import fixtures
from ribbonlift.diagram import SphericalDiagram, crossing_count, extract_theta
from ribbonlift.errors import NegativeRamification
from ribbonlift.lift import (
    boundary_circles,
    build_covering,
    check_region_formula,
    check_riemann_hurwitz,
    intersection_points,
    ramification_distributions,
    total_ramification,
)
from ribbonlift.ribbon import genus, surface_invariants
from ribbonlift.sampling import random_planar_map


def test_embedded_theta_circles():
    d = fixtures.load("theta_embedded.diagram")
    circles = boundary_circles(d)
    assert len(circles) == 3
    assert all(c.self_crossing_word.word == () for c in circles)
    assert sorted(x for c in circles for x in c.face_cycle) == list(range(6))


def test_embedded_theta_covering():
    r = build_covering(fixtures.load("theta_embedded.diagram"))
    assert r.chi_N == -1
    assert [c.seifert.num_seifert_circles for c in r.circles] == [1, 1, 1]
    assert (r.chi_Y, r.genus_Y, r.branch_count, r.degree) == (2, 0, 0, 1)
    assert check_riemann_hurwitz(r)
    assert not check_riemann_hurwitz(replace(r, branch_count=r.branch_count - 1))


def test_crossing_free_diagrams_are_identity_coverings():
    rng = random.Random(4)
    for _ in range(60):
        d = SphericalDiagram(random_planar_map(rng, rng.randint(0, 8)))
        r = build_covering(d)
        assert (r.degree, r.genus_Y, r.branch_count) == (1, 0, 0)
        assert len(r.circles) == surface_invariants(d.map).num_faces
        assert all(c.seifert.num_seifert_circles == 1 for c in r.circles)


def test_one_crossing_theta_points():
    d = fixtures.load("theta_one_crossing.diagram")
    pts = intersection_points(d)
    assert len(pts) == 4
    words = sum(len(c.self_crossing_word.word) for c in boundary_circles(d)) // 2
    assert words + sum(1 for p in pts if p.circles[0] != p.circles[1]) == 4


def test_one_crossing_bouquet_covering():
    r = build_covering(fixtures.load("bouquet_one_crossing.diagram"))
    assert check_riemann_hurwitz(r)
    assert r.genus_Y >= 1
    assert (r.chi_Y, r.genus_Y, r.branch_count, r.degree) == (0, 1, 4, 2)


def _face_index(d):
    im = extract_theta(d)
    return {p: k for k, f in enumerate(im.theta.faces) for p in f}


def test_corpus_identities(corpus):
    for d in corpus:
        r = build_covering(d)
        theta = extract_theta(d).theta
        inv = surface_invariants(theta)
        sum_m = sum(c.seifert.num_seifert_circles for c in r.circles)
        assert check_riemann_hurwitz(r)
        assert r.chi_Y % 2 == 0
        assert r.degree >= 1 and r.genus_Y >= 0
        assert 2 * r.degree == inv.num_vertices - inv.num_edges + sum_m == r.chi_Y + r.branch_count
        assert r.genus_Y == genus(theta) + sum(c.seifert.genus_sigma for c in r.circles)
        assert len(r.circles) == inv.num_faces


def test_four_points_per_crossing(corpus):
    for d in corpus:
        pts = intersection_points(d)
        assert len(pts) == 4 * crossing_count(d)
        self_points = sum(len(c.self_crossing_word.word) for c in boundary_circles(d)) // 2
        mixed = sum(1 for p in pts if p.circles[0] != p.circles[1])
        assert self_points + mixed == 4 * crossing_count(d)


def test_distinct_circles_meet_evenly(corpus):
    # two closed curves in the sphere cross an even number of times
    for d in corpus:
        pairs = Counter(tuple(sorted(p.circles)) for p in intersection_points(d) if p.circles[0] != p.circles[1])
        assert all(n % 2 == 0 for n in pairs.values())


def test_strand_owners_match_face_sides(corpus):
    # the four points of a crossing pair the face of each strand side
    for d in corpus:
        im = extract_theta(d)
        face = _face_index(d)
        owners = {p.label: sorted(p.circles) for p in intersection_points(d)}
        for rec in im.crossings:
            sides = []
            for edge, _, _ in rec.strands:
                p = edge
                sides.append((face[p], face[im.theta.alpha[p]]))
            want = sorted(sorted((a, b)) for a in sides[0] for b in sides[1])
            got = sorted(owners[x] for x in rec.darts)
            assert got == want


def test_total_ramification():
    assert total_ramification(1, 0) == 0
    assert total_ramification(2, 0) == 2
    assert total_ramification(3, 1) == 6
    with pytest.raises(NegativeRamification):
        total_ramification(0, 0)


def test_ramification_distributions():
    assert ramification_distributions(1, 0) == [()]
    assert sorted(ramification_distributions(2, 0)) == [(1, 1), (2,)]
    assert ramification_distributions(2, 0, realizable=True) == [(1, 1)]
    for parts in ramification_distributions(3, 1):
        assert sum(parts) == 6
    assert len(ramification_distributions(3, 1)) == 11


def test_region_formula():
    assert check_region_formula(1, 1, [])
    assert check_region_formula(1, 2, [2])
    assert not check_region_formula(0, 1, [])
    assert not check_region_formula(1, 1, [2])
    with pytest.raises(ValueError):
        check_region_formula(1, 1, [1])
