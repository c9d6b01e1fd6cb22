"""Acceptance criteria, one check per criterion.

Run with ``pytest tests/test_acceptance.py`` (each check prints a PASS or
FAIL line) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
from itertools import permutations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import diagram_corpus  # noqa: E402
from oracles import perfect_matching_words  # noqa: E402
from ribbonlift import fixtures  # noqa: E402
from ribbonlift.bounds import (  # noqa: E402
    crossing_number_small,
    equality_necessary_condition,
    euler_crossing_lower_bound,
    known_crossing_table,
    self_intersection_lower_bound,
)
from ribbonlift.defect import min_defect  # noqa: E402
from ribbonlift.diagram import (  # noqa: E402
    SphericalDiagram,
    crossing_count,
    extract_theta,
    remove_edge_self_crossings,
    resolve_all_crossings,
    restore_all,
    same_edge_crossings,
)
from ribbonlift.lift import build_covering, check_riemann_hurwitz  # noqa: E402
from ribbonlift.multigraph import complete_bipartite_graph, complete_graph  # noqa: E402
from ribbonlift.ribbon import (  # noqa: E402
    canonical_bouquet,
    genus,
    make_trivalent,
    min_genus_over_rotations,
    mirror,
    reverse_vertex_rotation,
    surface_invariants,
    underlying_abstract_graph,
)
from ribbonlift.sampling import random_planar_map, random_rotation_system, random_trivalent  # noqa: E402
from ribbonlift.seifert import ImmersedCircleWord, fill_surface  # noqa: E402

HERE = Path(__file__).parent


def genus_formula():
    theta = fixtures.load("theta_planar.ribbon")
    same = fixtures.load("theta_same_rotation.ribbon")
    assert surface_invariants(theta).genus == 0
    inv = surface_invariants(same)
    assert (inv.genus, inv.num_faces) == (1, 1)
    assert 4 * inv.genus == 4 + inv.num_vertices - 2 * inv.num_faces
    rng = random.Random(101)
    for _ in range(200):
        g = random_trivalent(rng, rng.choice([2, 4]))
        assert g.num_darts <= 16
        inv = surface_invariants(g)
        assert 4 * inv.genus == 4 + inv.num_vertices - 2 * inv.num_faces
    return "200 random trivalent systems"


def spanning_constructions():
    for k in range(1, 7):
        inv = surface_invariants(canonical_bouquet(k))
        assert (inv.num_faces, inv.genus) == (1, k)
    count = 0
    for name in fixtures.names():
        if name.endswith(".ribbon"):
            g = fixtures.load(name)
            assert genus(make_trivalent(g)) == genus(g)
            count += 1
    rng = random.Random(102)
    for _ in range(200):
        g = random_rotation_system(rng, rng.choice(range(6, 17, 2)))
        t = make_trivalent(g)
        assert all(len(c) == 3 for c in t.vertices) and genus(t) == genus(g)
    return "bouquets 1..6, %d fixtures, 200 random graphs" % count


def minimum_genus():
    assert min_genus_over_rotations(complete_graph(4)) == 0
    assert min_genus_over_rotations(complete_graph(5)) == 1
    assert min_genus_over_rotations(complete_bipartite_graph(3, 3)) == 1
    k7 = fixtures.load("k7_torus.ribbon")
    inv = surface_invariants(k7)
    assert (inv.genus, inv.num_faces) == (1, 14)
    assert underlying_abstract_graph(k7).canonical() == complete_graph(7).canonical()
    return "K4 0, K5 1, K3,3 1, K7 torus F=14"


def seifert_suite():
    def counts(w):
        s = fill_surface(ImmersedCircleWord(tuple(w)))
        return s.num_seifert_circles, s.num_crossings, s.euler_characteristic_sigma, s.genus_sigma

    assert counts("") == (1, 0, 1, 0)
    assert counts("AA") == (2, 1, 1, 0)
    assert counts("ABCABC") == (2, 3, -1, 1)
    n = 0
    for d in range(6):
        for w in perfect_matching_words(d):
            m, dd, _, _ = counts(w)
            assert (m + dd) % 2 == 1
            n += 1
    return "%d words with d <= 5" % n


def lift_suite():
    rng = random.Random(103)
    for _ in range(30):
        r = build_covering(SphericalDiagram(random_planar_map(rng, rng.randint(0, 8))))
        assert (r.degree, r.genus_Y, r.branch_count) == (1, 0, 0)
    corpus = [d for d in diagram_corpus() if 1 <= crossing_count(d) <= 4]
    assert len(corpus) >= 20
    for d in corpus:
        r = build_covering(d)
        theta = extract_theta(d).theta
        inv = surface_invariants(theta)
        sum_m = sum(c.seifert.num_seifert_circles for c in r.circles)
        assert check_riemann_hurwitz(r)
        assert inv.num_vertices - inv.num_edges + sum_m == r.chi_Y + r.branch_count == 2 * r.degree
        assert r.chi_Y % 2 == 0
        assert r.genus_Y == genus(theta) + sum(c.seifert.genus_sigma for c in r.circles)
    return "30 embedded diagrams, %d diagrams with crossings" % len(corpus)


def crossing_moves():
    corpus = diagram_corpus()
    orders = 0
    for d in corpus:
        assert genus(resolve_all_crossings(d)) == 0
        theta = extract_theta(d).theta
        assert genus(theta) <= crossing_count(d)
        for order in permutations(sorted(d.crossings)):
            steps = restore_all(d, order)
            assert steps[-1] == theta
            assert all(genus(b) - genus(a) <= 1 for a, b in zip(steps, steps[1:]))
            orders += 1
    return "%d diagrams, %d restore orders" % (len(corpus), orders)


def bounds_suite():
    assert self_intersection_lower_bound(1, complete_graph(7)).combined == 9
    assert crossing_number_small(complete_graph(4)).value == 0
    assert crossing_number_small(complete_graph(5)).value == 1
    assert crossing_number_small(complete_bipartite_graph(3, 3)).value == 1
    k6 = crossing_number_small(complete_graph(6), max_k=3)
    assert (k6.value, k6.exact) == (3, True)
    assert euler_crossing_lower_bound(complete_graph(7)) == 6 <= known_crossing_table("K7") == 9
    assert equality_necessary_condition(1, complete_graph(7)) is False
    assert equality_necessary_condition(1, complete_graph(5)) is True
    return "K7 bound 9, crossing numbers 0/1/1/3"


def defect_suite():
    k4 = fixtures.load("k4_planar.ribbon")
    assert min_defect(k4).minimum == 0
    assert min_defect(reverse_vertex_rotation(k4, 0)).minimum == 1
    assert min_defect(mirror(k4)).minimum == 0
    for name in ("k4_planar.ribbon", "cube_planar.ribbon"):
        g = fixtures.load(name)
        h = reverse_vertex_rotation(g, 0)
        for r in (min_defect(g), min_defect(h)):
            assert r.delta_plus + r.delta_minus == len(g.vertices)
    return "K4 0/1/0, cube and K4 sums equal V"


def kink_removal():
    d = fixtures.load("theta_double_kink.diagram")
    assert crossing_count(d) == 2 and len(same_edge_crossings(d)) == 2
    out = remove_edge_self_crossings(d)
    assert same_edge_crossings(out) == [] and crossing_count(out) == 0
    assert underlying_abstract_graph(extract_theta(out).theta) == underlying_abstract_graph(extract_theta(d).theta)
    return "2 nested kinks removed"


CLI_RUNS = [
    ["validate", "theta_one_crossing.diagram"],
    ["genus", "k7_torus.ribbon"],
    ["faces", "theta_same_rotation.ribbon"],
    ["components", HERE / "fixtures" / "two_thetas.ribbon"],
    ["bouquet", "--genus", "4"],
    ["trivalent", "k7_torus.ribbon"],
    ["mingenus", HERE / "fixtures" / "k5.ribbon"],
    ["colourrotate", "theta_coloured.ribbon"],
    ["resolve", "theta_one_crossing.diagram"],
    ["restore", "theta_double_kink.diagram"],
    ["unkink", "theta_double_kink.diagram"],
    ["seifert", "trefoil.word"],
    ["lift", "bouquet_one_crossing.diagram"],
    ["bounds", "k7_torus.ribbon", "--genus", "1"],
    ["bounds", "theta_planar.ribbon"],
    ["defect", "cube_planar.ribbon"],
    ["defect", "theta_same_rotation.ribbon", "theta_planar.ribbon"],
]


def _cli(argv):
    args = []
    for a in argv:
        if isinstance(a, Path):
            args.append(str(a))
        elif a in fixtures.names():
            args.append(str(fixtures.path(a)))
        else:
            args.append(a)
    proc = subprocess.run([sys.executable, "-m", "ribbonlift.cli", *args], capture_output=True)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def determinism():
    for argv in CLI_RUNS:
        outs = {_cli(argv) for _ in range(3)}
        outs.add(_cli(argv + ["--jobs", "1"]))
        outs.add(_cli(argv + ["--jobs", "4"]))
        assert len(outs) == 1, argv
    return "%d reports, 3 runs plus jobs 1 and 4" % len(CLI_RUNS)


CRITERIA = [
    (1, "genus formula", genus_formula),
    (2, "spanning constructions", spanning_constructions),
    (3, "minimum genus", minimum_genus),
    (4, "seifert", seifert_suite),
    (5, "lift", lift_suite),
    (6, "crossing moves", crossing_moves),
    (7, "bounds", bounds_suite),
    (8, "defect", defect_suite),
    (9, "kink removal", kink_removal),
    (10, "determinism", determinism),
]


def _run(num, name, check):
    try:
        detail = check()
    except Exception as exc:  # report, then let pytest see the failure
        return False, "criterion %d (%s): FAIL %s: %s" % (num, name, type(exc).__name__, exc)
    return True, "criterion %d (%s): PASS %s" % (num, name, detail)


@pytest.mark.parametrize("num, name, check", CRITERIA, ids=[c[1].replace(" ", "_") for c in CRITERIA])
def test_criterion(num, name, check, capsys):
    ok, line = _run(num, name, check)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
