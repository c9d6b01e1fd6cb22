import random
import warnings

import pytest

from ribbonlift import fixtures
from ribbonlift.defect import defect_against, is_three_connected, min_defect, planarity_and_rotation
from ribbonlift.errors import AlphaMismatch, DartSetMismatch, NotPlanar, ReductionWarning
from ribbonlift.multigraph import complete_bipartite_graph, complete_graph, cube_graph, theta_graph
from ribbonlift.ribbon import (
    genus,
    min_genus_over_rotations,
    mirror,
    relabel,
    reverse_vertex_rotation,
    ribbon_from_cycles,
    surface_invariants,
    underlying_abstract_graph,
)
from ribbonlift.sampling import random_planar_map, random_rotation_system

THETA = ribbon_from_cycles([(0, 1, 2), (3, 5, 4)], [(0, 3), (1, 4), (2, 5)])
THETA_SAME = ribbon_from_cycles([(0, 1, 2), (3, 4, 5)], [(0, 3), (1, 4), (2, 5)])


def test_planar_rotation_of_k4():
    g = planarity_and_rotation(complete_graph(4))
    assert genus(g) == 0
    assert underlying_abstract_graph(g).canonical() == complete_graph(4).canonical()


def test_k5_not_planar():
    with pytest.raises(NotPlanar) as err:
        planarity_and_rotation(complete_graph(5))
    assert err.value.certificate


def test_theta_multigraph_rotation():
    g = planarity_and_rotation(theta_graph())
    inv = surface_invariants(g)
    assert (inv.genus, inv.num_faces) == (0, 3)


def test_rotation_keeps_ribbon_darts():
    g = fixtures.load("cube_planar.ribbon")
    emb = planarity_and_rotation(g)
    assert emb.alpha == g.alpha and genus(emb) == 0
    assert sorted(map(sorted, emb.vertices)) == sorted(map(sorted, g.vertices))


def test_three_connected():
    assert is_three_connected(complete_graph(4))
    assert is_three_connected(cube_graph())
    with pytest.warns(ReductionWarning):
        assert not is_three_connected(theta_graph())
    assert not is_three_connected(complete_bipartite_graph(2, 3))


def test_defect_against():
    k4 = fixtures.load("k4_planar.ribbon")
    assert defect_against(k4, k4) == 0
    assert defect_against(reverse_vertex_rotation(k4, 0), k4) == 1
    assert defect_against(THETA_SAME, THETA) == 1


def test_defect_against_errors():
    with pytest.raises(DartSetMismatch):
        defect_against(THETA, fixtures.load("k4_planar.ribbon"))
    other = ribbon_from_cycles([(0, 1, 2), (3, 5, 4)], [(0, 4), (1, 3), (2, 5)])
    with pytest.raises(AlphaMismatch):
        defect_against(THETA, other)


def test_min_defect_k4():
    k4 = fixtures.load("k4_planar.ribbon")
    r = min_defect(k4)
    assert (r.delta_plus, r.delta_minus, r.minimum, r.exact) == (0, 4, 0, True)
    r = min_defect(reverse_vertex_rotation(k4, 0))
    assert (r.delta_plus, r.delta_minus, r.minimum) == (1, 3, 1)
    r = min_defect(mirror(k4))
    assert (r.delta_plus, r.delta_minus, r.minimum) == (4, 0, 0)


def test_trivalent_sum_is_vertex_count():
    for name in ("k4_planar.ribbon", "cube_planar.ribbon"):
        g = fixtures.load(name)
        rng = random.Random(name)
        for _ in range(20):
            h = g
            for c in g.vertices:
                if rng.random() < 0.5:
                    h = reverse_vertex_rotation(h, c[0])
            r = min_defect(h)
            assert r.delta_plus + r.delta_minus == len(g.vertices)


def test_non_three_connected_flagged():
    # the theta has a 2-vertex cut, so a nonzero answer is only an upper bound
    with pytest.warns(ReductionWarning):
        r = min_defect(THETA_SAME)
    assert not r.exact and r.minimum == 1
    r = min_defect(THETA)
    assert r.exact and r.minimum == 0


def test_min_defect_non_planar():
    with pytest.raises(NotPlanar):
        min_defect(fixtures.load("k7_torus.ribbon"))


def test_genus_zero_rotations_have_zero_defect():
    rng = random.Random(6)
    for _ in range(30):
        g = random_planar_map(rng, rng.randint(0, 6))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ReductionWarning)
            assert min_defect(g).minimum == 0


def test_defect_symmetric_and_relabel_invariant():
    rng = random.Random(8)
    k4 = fixtures.load("cube_planar.ribbon")
    for _ in range(20):
        a = k4
        for c in k4.vertices:
            if rng.random() < 0.5:
                a = reverse_vertex_rotation(a, c[0])
        b = planarity_and_rotation(k4)
        assert defect_against(a, b) == defect_against(b, a)
        p = list(range(k4.num_darts))
        rng.shuffle(p)
        assert defect_against(relabel(a, p), relabel(b, p)) == defect_against(a, b)


def test_planarity_matches_min_genus():
    rng = random.Random(12)
    checked = 0
    while checked < 25:
        g = random_rotation_system(rng, rng.choice(range(6, 15, 2)))
        if max(g.valences()) > 6:
            continue
        G = underlying_abstract_graph(g)
        try:
            planarity_and_rotation(G)
            planar = True
        except NotPlanar:
            planar = False
        assert planar == (min_genus_over_rotations(G) == 0)
        checked += 1
