"""Random ribbon graphs and diagrams, for property tests and demos.

All samplers take a :class:`random.Random` so results are reproducible.
"""

from __future__ import annotations

import random
from itertools import permutations

from .diagram import SphericalDiagram, extract_theta, validate_diagram
from .errors import RibbonLiftError
from .ribbon import RibbonGraph, is_connected, perm_from_cycles, ribbon_from_cycles, surface_invariants


def _random_matching(rng: random.Random, n: int) -> list[int]:
    darts = list(range(n))
    rng.shuffle(darts)
    alpha = [0] * n
    for a, b in zip(darts[::2], darts[1::2]):
        alpha[a], alpha[b] = b, a
    return alpha


def random_rotation_system(rng: random.Random, num_darts: int, min_valence: int = 3) -> RibbonGraph:
    """A connected ribbon graph on ``num_darts`` (even) darts, valences >= min_valence."""
    if num_darts % 2 or num_darts < min_valence:
        raise ValueError("need an even number of darts, at least %d" % min_valence)
    while True:
        sizes = []
        left = num_darts
        while left:
            k = rng.randint(min_valence, left)
            if left - k and left - k < min_valence:
                continue
            sizes.append(k)
            left -= k
        darts = list(range(num_darts))
        rng.shuffle(darts)
        cycles, i = [], 0
        for k in sizes:
            cycles.append(darts[i:i + k])
            i += k
        sigma = perm_from_cycles(cycles, num_darts)
        g = RibbonGraph(tuple(sigma), tuple(_random_matching(rng, num_darts)))
        if is_connected(g):
            return g


def random_trivalent(rng: random.Random, num_vertices: int) -> RibbonGraph:
    """A connected trivalent rotation system (loops and multi-edges allowed)."""
    n = 3 * num_vertices
    if n % 2:
        raise ValueError("a trivalent graph has an even number of vertices")
    sigma = perm_from_cycles([(3 * v, 3 * v + 1, 3 * v + 2) for v in range(num_vertices)], n)
    while True:
        g = RibbonGraph(tuple(sigma), tuple(_random_matching(rng, n)))
        if is_connected(g):
            return g


# ---------------------------------------------------------------------------
# planar maps and diagrams
# ---------------------------------------------------------------------------

def _add_chord(g: RibbonGraph, c1: int, c2: int) -> RibbonGraph:
    """New edge from the corner after ``c1`` to the corner after ``c2``."""
    n = g.num_darts
    sigma = list(g.sigma) + [0, 0]
    alpha = list(g.alpha) + [n + 1, n]
    if c1 == c2:
        sigma[c1], sigma[n], sigma[n + 1] = n, n + 1, g.sigma[c1]
    else:
        sigma[c1], sigma[n] = n, g.sigma[c1]
        sigma[c2], sigma[n + 1] = n + 1, g.sigma[c2]
    return RibbonGraph(tuple(sigma), tuple(alpha))


def _subdivide(g: RibbonGraph, x: int) -> RibbonGraph:
    n = g.num_darts
    y = g.alpha[x]
    sigma = list(g.sigma) + [n + 1, n]
    alpha = list(g.alpha) + [x, y]
    alpha[x], alpha[y] = n, n + 1
    return RibbonGraph(tuple(sigma), tuple(alpha))


def random_planar_map(rng: random.Random, steps: int = 3) -> RibbonGraph:
    """Grow a genus-0 map from the planar theta; every vertex has valence >= 3."""
    g = ribbon_from_cycles([(0, 1, 2), (3, 5, 4)], [(0, 3), (1, 4), (2, 5)])
    for _ in range(steps):
        if rng.random() < 0.5:
            face = rng.choice(g.faces)
            a, b = rng.choice(face), rng.choice(face)
            # corner before dart f is (sigma^-1(f), f)
            inv = {g.sigma[d]: d for d in range(g.num_darts)}
            g = _add_chord(g, inv[a], inv[b])
        else:
            x = rng.randrange(g.num_darts)
            g = _subdivide(g, x)
            z = g.num_darts - 2          # new valence-2 vertex, dart facing x
            face = next(f for f in g.faces if z in f)
            inv = {g.sigma[d]: d for d in range(g.num_darts)}
            target = rng.choice([f for f in face if f not in (z, z + 1)] or [z])
            g = _add_chord(g, inv[z], inv[target])
        assert surface_invariants(g).genus == 0
    return g


def _with_crossing(d: SphericalDiagram, ends, rng: random.Random):
    """Attach ``ends`` (four dart endpoints) to a new 4-valent crossing in all
    possible ways; return a random valid result or None."""
    m = d.map
    n = m.num_darts
    sigma = list(m.sigma) + [n + 1, n + 2, n + 3, n]
    options = []
    for perm in permutations(range(4)):
        alpha = list(m.alpha) + [0, 0, 0, 0]
        pending = [None] * 4
        for end, k in zip(ends, perm):
            pending[k] = end
        for k, end in enumerate(pending):
            if end is None:
                continue
            alpha[end], alpha[n + k] = n + k, end
        free = [n + k for k in range(4) if pending[k] is None]
        if len(free) == 2:
            alpha[free[0]], alpha[free[1]] = free[1], free[0]
        elif free:
            continue
        try:
            g = RibbonGraph(tuple(sigma), tuple(alpha))
            new = SphericalDiagram(g, set(d.crossings) | {n})
            validate_diagram(new)
            if is_connected(extract_theta(new).theta):
                options.append(new)
        except RibbonLiftError:
            continue
        except ValueError:
            continue
    return rng.choice(options) if options else None


def insert_kink(d: SphericalDiagram, x: int, rng: random.Random | None = None) -> SphericalDiagram:
    """Put a small curl (a crossing of one edge with itself) on the map edge at dart ``x``."""
    rng = rng or random.Random(0)
    m = d.map
    y = m.alpha[x]
    out = _with_crossing(d, (x, y), rng)
    if out is None:
        raise ValueError("no planar kink at dart %d" % x)
    return out


def swap_crossing(d: SphericalDiagram, x: int, z: int, rng: random.Random):
    """Cut map edges at ``x`` and ``z`` and rejoin all four ends through a new crossing."""
    m = d.map
    ends = (x, m.alpha[x], z, m.alpha[z])
    if len(set(ends)) < 4:
        return None
    return _with_crossing(d, ends, rng)


def random_diagram(rng: random.Random, num_crossings: int, steps: int = 3,
                   kink_rate: float = 0.2) -> SphericalDiagram:
    """A valid diagram with exactly ``num_crossings`` crossings and connected theta."""
    while True:
        d = SphericalDiagram(random_planar_map(rng, steps))
        for _ in range(50 * (num_crossings + 1)):
            if len(d.crossings) == num_crossings:
                return d
            m = d.map
            if rng.random() < kink_rate:
                x = rng.randrange(m.num_darts)
                out = _with_crossing(d, (x, m.alpha[x]), rng)
            else:
                face = rng.choice(m.faces)
                if len(face) < 2:
                    continue
                x, z = rng.sample(face, 2)
                out = swap_crossing(d, x, z, rng)
            if out is not None:
                d = out
