"""Ribbon graphs encoded as a pair of permutations on darts.

A ribbon graph on the darts ``0..n-1`` is given by

- ``sigma``: the rotation; its cycles are the vertices, each cycle listing
  the half-edges at the vertex in counterclockwise order;
- ``alpha``: a fixed-point-free involution whose cycles are the edges.

Faces are the cycles of ``d -> sigma[alpha[d]]``. The surface obtained by
thickening the graph and capping every boundary component has Euler
characteristic ``V - E + F``.

Example, the planar theta graph::

    >>> theta = RibbonGraph((1, 2, 0, 5, 3, 4), (3, 4, 5, 0, 1, 2))
    >>> orbits(theta, "face")
    [(0, 5), (1, 3), (2, 4)]
    >>> surface_invariants(theta).genus
    0
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import islice, permutations

from .errors import (
    BudgetExceeded,
    DartNotInVertex,
    Disconnected,
    EmptyGraph,
    InvalidGenus,
    LowValence,
    MissingColour,
    NotInvolution,
    NotPermutation,
    NotPlanar,
    UnknownVertex,
)
from .multigraph import AbstractMultigraph

COLOURS = ("black", "white")


# ---------------------------------------------------------------------------
# permutation helpers
# ---------------------------------------------------------------------------

def perm_cycles(p) -> list[tuple[int, ...]]:
    """Cycles of ``p``, each starting at its least element, sorted by it."""
    n = len(p)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = p[d]
        cycles.append(tuple(cycle))
    return cycles


def perm_num_cycles(p) -> int:
    n = len(p)
    seen = bytearray(n)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        d = start
        while not seen[d]:
            seen[d] = 1
            d = p[d]
    return count


def perm_invert(p) -> list[int]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return inv


def perm_from_cycles(cycles, n: int) -> list[int]:
    p = list(range(n))
    for c in cycles:
        for i, d in enumerate(c):
            p[d] = c[(i + 1) % len(c)]
    return p


def _is_permutation(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RibbonGraph:
    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    colours: tuple[tuple[int, str], ...] = field(default=())

    def __post_init__(self):
        sigma = tuple(int(x) for x in self.sigma)
        alpha = tuple(int(x) for x in self.alpha)
        n = len(sigma)
        if not _is_permutation(sigma, n):
            raise NotPermutation("sigma is not a permutation of 0..%d" % (n - 1))
        if not _is_permutation(alpha, n):
            raise NotPermutation("alpha is not a permutation of 0..%d" % (n - 1))
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "alpha", alpha)

        colours = self.colours
        if isinstance(colours, dict):
            colours = colours.items()
        keyed = {}
        for d, c in colours:
            if c not in COLOURS:
                raise ValueError("unknown colour %r" % (c,))
            if not 0 <= d < n:
                raise UnknownVertex("colour given for dart %d outside 0..%d" % (d, n - 1))
            key = self.vertex_rep(d)
            if key in keyed and keyed[key] != c:
                raise ValueError("conflicting colours for vertex %d" % key)
            keyed[key] = c
        object.__setattr__(self, "colours", tuple(sorted(keyed.items())))

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        return perm_cycles(self.sigma)

    @cached_property
    def edges(self) -> list[tuple[int, ...]]:
        return perm_cycles(self.alpha)

    @cached_property
    def face_perm(self) -> tuple[int, ...]:
        return tuple(self.sigma[self.alpha[d]] for d in range(self.num_darts))

    @cached_property
    def faces(self) -> list[tuple[int, ...]]:
        return perm_cycles(self.face_perm)

    @cached_property
    def vertex_index(self) -> tuple[int, ...]:
        """``vertex_index[d]`` is the position of d's vertex in ``vertices``."""
        idx = [0] * self.num_darts
        for i, cyc in enumerate(self.vertices):
            for d in cyc:
                idx[d] = i
        return tuple(idx)

    def vertex_rep(self, d: int) -> int:
        """Least dart of the vertex containing ``d``."""
        return self.vertices[self.vertex_index[d]][0]

    def vertex_cycle(self, d: int) -> tuple[int, ...]:
        if not 0 <= d < self.num_darts:
            raise UnknownVertex("dart %d is not in 0..%d" % (d, self.num_darts - 1))
        return self.vertices[self.vertex_index[d]]

    @property
    def colour_map(self) -> dict[int, str]:
        return dict(self.colours)

    def colour_of(self, d: int):
        return self.colour_map.get(self.vertex_rep(d))

    def valences(self) -> list[int]:
        return [len(c) for c in self.vertices]

    def __repr__(self):
        return "RibbonGraph(sigma=%s, alpha=%s%s)" % (
            _cycle_str(self.vertices),
            _cycle_str(self.edges),
            ", colours=%s" % dict(self.colours) if self.colours else "",
        )


def _cycle_str(cycles):
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


@dataclass(frozen=True)
class SurfaceInvariants:
    num_vertices: int
    num_edges: int
    num_faces: int
    euler_characteristic: int
    genus: int


def ribbon_from_cycles(vertex_cycles, edge_pairs, colours=()) -> RibbonGraph:
    """Build a ribbon graph from cycle notation, e.g. ``[(0, 1, 2), (3, 5, 4)]``."""
    n = sum(len(c) for c in vertex_cycles)
    sigma = perm_from_cycles(vertex_cycles, n)
    alpha = perm_from_cycles(edge_pairs, n)
    return RibbonGraph(tuple(sigma), tuple(alpha), colours)


def ribbon_from_rotations(rotations) -> RibbonGraph:
    """Ribbon graph of a simple graph given by neighbour lists in cyclic order.

    ``rotations[v]`` lists the neighbours of node ``v`` counterclockwise.
    Darts are numbered node by node in the order of the lists.
    """
    dart = {}
    vertex_cycles = []
    n = 0
    for v, nbrs in enumerate(rotations):
        cyc = []
        for w in nbrs:
            if (v, w) in dart:
                raise ValueError("repeated neighbour %d at node %d" % (w, v))
            dart[v, w] = n
            cyc.append(n)
            n += 1
        vertex_cycles.append(tuple(cyc))
    pairs = []
    for (v, w), d in dart.items():
        if (w, v) not in dart:
            raise ValueError("neighbour lists are not symmetric at %d-%d" % (v, w))
        if v < w:
            pairs.append((d, dart[w, v]))
    return ribbon_from_cycles(vertex_cycles, pairs)


# ---------------------------------------------------------------------------
# validation and invariants
# ---------------------------------------------------------------------------

def validate_ribbon_graph(g: RibbonGraph, allow_low_valence: bool = False) -> None:
    n = g.num_darts
    if n == 0:
        raise EmptyGraph("ribbon graph has no darts")
    if not _is_permutation(g.sigma, n) or not _is_permutation(g.alpha, n):
        raise NotPermutation("sigma and alpha must be permutations of 0..%d" % (n - 1))
    for d in range(n):
        if g.alpha[d] == d:
            raise NotInvolution("alpha fixes dart %d" % d)
        if g.alpha[g.alpha[d]] != d:
            raise NotInvolution("alpha is not an involution at dart %d" % d)
    if not allow_low_valence:
        for cyc in g.vertices:
            if len(cyc) < 3:
                raise LowValence("vertex %s has valence %d" % (_cycle_str([cyc]), len(cyc)))


def orbits(g: RibbonGraph, kind: str) -> list[tuple[int, ...]]:
    """Vertex, edge or face cycles in canonical order."""
    if kind == "vertex":
        return list(g.vertices)
    if kind == "edge":
        return list(g.edges)
    if kind == "face":
        return list(g.faces)
    raise ValueError("kind must be 'vertex', 'edge' or 'face', not %r" % (kind,))


def is_connected(g: RibbonGraph) -> bool:
    n = g.num_darts
    if n == 0:
        return True
    return len(_component_dart_sets(g)) == 1


def _component_dart_sets(g: RibbonGraph) -> list[list[int]]:
    n = g.num_darts
    comp = [-1] * n
    result = []
    for start in range(n):
        if comp[start] >= 0:
            continue
        k = len(result)
        comp[start] = k
        stack = [start]
        darts = []
        while stack:
            d = stack.pop()
            darts.append(d)
            for e in (g.sigma[d], g.alpha[d]):
                if comp[e] < 0:
                    comp[e] = k
                    stack.append(e)
        result.append(sorted(darts))
    return result


def surface_invariants(g: RibbonGraph) -> SurfaceInvariants:
    if g.num_darts and not is_connected(g):
        raise Disconnected("ribbon graph has several components; split them first")
    V = len(g.vertices)
    E = len(g.edges)
    F = len(g.faces)
    chi = V - E + F
    return SurfaceInvariants(V, E, F, chi, 1 - chi // 2)


def genus(g: RibbonGraph) -> int:
    return surface_invariants(g).genus


def connected_components(g: RibbonGraph, with_labels: bool = False):
    """Split into connected ribbon graphs.

    Darts of each component are renumbered by increasing original label.
    With ``with_labels`` the result is a list of ``(component, old_darts)``
    where ``old_darts[i]`` is the original label of new dart ``i``.
    """
    out = []
    colours = g.colour_map
    for darts in _component_dart_sets(g):
        sub = relabel_subset(g, darts)
        sub_colours = {i: colours[d] for i, d in enumerate(darts) if d in colours}
        sub = RibbonGraph(sub.sigma, sub.alpha, sub_colours)
        out.append((sub, tuple(darts)) if with_labels else sub)
    return out


def relabel_subset(g: RibbonGraph, darts) -> RibbonGraph:
    """Restrict to a sigma- and alpha-closed dart subset, renumbered in order."""
    new = {d: i for i, d in enumerate(darts)}
    sigma = tuple(new[g.sigma[d]] for d in darts)
    alpha = tuple(new[g.alpha[d]] for d in darts)
    return RibbonGraph(sigma, alpha)


def relabel(g: RibbonGraph, p) -> RibbonGraph:
    """Rename dart ``d`` to ``p[d]``."""
    n = g.num_darts
    inv = perm_invert(p)
    sigma = tuple(p[g.sigma[inv[i]]] for i in range(n))
    alpha = tuple(p[g.alpha[inv[i]]] for i in range(n))
    colours = {p[d]: c for d, c in g.colours}
    return RibbonGraph(sigma, alpha, colours)


def underlying_abstract_graph(g: RibbonGraph) -> AbstractMultigraph:
    """Forget the rotation.

    Node ``i`` is ``g.vertices[i]`` and link ``j`` is ``g.edges[j]``.
    """
    idx = g.vertex_index
    links = tuple((idx[a], idx[b]) for a, b in g.edges)
    return AbstractMultigraph(len(g.vertices), links)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def canonical_bouquet(genus_target: int) -> RibbonGraph:
    """One vertex with rotation ``a1 b1 a1' b1' ... ag bg ag' bg'``.

    The loop ``ai`` pairs dart ``4i`` with ``4i+2`` and ``bi`` pairs ``4i+1``
    with ``4i+3``; the complement of the graph is a single disk.
    """
    if genus_target < 1:
        raise InvalidGenus("bouquet needs genus >= 1, got %d" % genus_target)
    n = 4 * genus_target
    sigma = tuple((d + 1) % n for d in range(n))
    alpha = [0] * n
    for i in range(genus_target):
        a, b, abar, bbar = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        alpha[a], alpha[abar] = abar, a
        alpha[b], alpha[bbar] = bbar, b
    return RibbonGraph(sigma, tuple(alpha))


def wedge_at_vertex(g: RibbonGraph, v: int, num_loops: int, insertion_position: int) -> RibbonGraph:
    """Insert ``num_loops`` small loops at vertex ``v`` right after a dart.

    ``v`` is any dart of the vertex. New darts ``n, n+1, ...`` are added in
    pairs ``(x, x+1)`` which are adjacent in the rotation, so each loop bounds
    an empty face and the genus does not change.
    """
    cyc = g.vertex_cycle(v)
    if insertion_position not in cyc:
        raise DartNotInVertex("dart %d is not at vertex %s" % (insertion_position, _cycle_str([cyc])))
    if num_loops == 0:
        return g
    n = g.num_darts
    new = list(range(n, n + 2 * num_loops))
    sigma = list(g.sigma) + [0] * len(new)
    alpha = list(g.alpha) + [0] * len(new)
    after = g.sigma[insertion_position]
    chain = [insertion_position] + new + [after]
    for a, b in zip(chain, chain[1:]):
        sigma[a] = b
    for x in new[::2]:
        alpha[x], alpha[x + 1] = x + 1, x
    return RibbonGraph(tuple(sigma), tuple(alpha), g.colours)


def make_trivalent(g: RibbonGraph) -> RibbonGraph:
    """Blow every vertex of valence k > 3 up into a k-gon of trivalent vertices.

    Original darts keep their labels. For a vertex ``(d0 ... dk-1)`` the
    polygon corner at ``di`` has rotation ``(di, pi, qi)`` where ``pi`` runs
    to the next corner and ``qi`` comes from the previous one.
    """
    for cyc in g.vertices:
        if len(cyc) < 3:
            raise LowValence("vertex %s has valence %d" % (_cycle_str([cyc]), len(cyc)))
    sigma = list(g.sigma)
    alpha = list(g.alpha)
    colours = dict(g.colours)
    for cyc in g.vertices:
        k = len(cyc)
        if k <= 3:
            continue
        colours.pop(cyc[0], None)
        base = len(sigma)
        sigma.extend([0] * 2 * k)
        alpha.extend([0] * 2 * k)
        p = [base + 2 * i for i in range(k)]
        q = [base + 2 * i + 1 for i in range(k)]
        for i, d in enumerate(cyc):
            sigma[d], sigma[p[i]], sigma[q[i]] = p[i], q[i], d
            j = (i + 1) % k
            alpha[p[i]], alpha[q[j]] = q[j], p[i]
    return RibbonGraph(tuple(sigma), tuple(alpha), colours)


def reverse_vertex_rotation(g: RibbonGraph, v: int) -> RibbonGraph:
    """Replace the rotation at the vertex containing dart ``v`` by its inverse."""
    cyc = g.vertex_cycle(v)
    sigma = list(g.sigma)
    for i, d in enumerate(cyc):
        sigma[d] = cyc[i - 1]
    return RibbonGraph(tuple(sigma), g.alpha, g.colours)


def mirror(g: RibbonGraph) -> RibbonGraph:
    """Reverse every rotation (the same graph on the oppositely oriented surface)."""
    return RibbonGraph(tuple(perm_invert(g.sigma)), g.alpha, g.colours)


def rotation_from_colours(planar: RibbonGraph) -> RibbonGraph:
    """Counterclockwise order at black vertices, clockwise at white ones.

    ``planar`` must be a genus-0 rotation system read counterclockwise and
    every vertex must carry a colour.
    """
    colours = planar.colour_map
    for cyc in planar.vertices:
        if cyc[0] not in colours:
            raise MissingColour("vertex %s has no colour" % _cycle_str([cyc]))
    if genus(planar) != 0:
        raise NotPlanar("colour rotation needs a genus-0 input")
    g = planar
    for cyc in planar.vertices:
        if colours[cyc[0]] == "white":
            g = reverse_vertex_rotation(g, cyc[0])
    return g


# ---------------------------------------------------------------------------
# exhaustive minimum genus
# ---------------------------------------------------------------------------

def _vertex_orders(ds, mirror_cut):
    """Cyclic orders of the darts ``ds``, all starting at ``ds[0]``."""
    if len(ds) <= 1:
        yield tuple(ds)
        return
    for p in permutations(ds[1:]):
        if mirror_cut and len(ds) >= 3 and p[0] > p[-1]:
            continue
        yield (ds[0],) + p


def _num_orders(k, mirror_cut):
    if k <= 1:
        return 1
    return math.factorial(k - 1) // (2 if mirror_cut and k >= 3 else 1)


def _all_systems(darts_at, first_free, fixed=None):
    """Lazily enumerate rotation systems; ``fixed`` pins the first free vertex."""
    def rec(v):
        if v == len(darts_at):
            yield ()
            return
        if v == first_free and fixed is not None:
            heads = [fixed]
        else:
            heads = _vertex_orders(darts_at[v], v == first_free)
        for o in heads:
            for tail in rec(v + 1):
                yield (o,) + tail
    return rec(0)


def _min_genus_chunk(n, alpha, V, E, darts_at, first_free, fixed=None, limit=None):
    best = None
    sigma = [0] * n
    for combo in islice(_all_systems(darts_at, first_free, fixed), limit):
        for cyc in combo:
            k = len(cyc)
            for i in range(k):
                sigma[cyc[i]] = cyc[(i + 1) % k]
        F = perm_num_cycles([sigma[alpha[d]] for d in range(n)])
        g = 1 - (V - E + F) // 2
        if best is None or g < best:
            best = g
            if g == 0:
                break
    return best


def min_genus_over_rotations(G: AbstractMultigraph, budget: int = 10**6, jobs: int = 1) -> int:
    """Minimum genus over all rotation systems of ``G``, by enumeration.

    Link ``j = (u, v)`` becomes darts ``2j`` at ``u`` and ``2j+1`` at ``v``.
    One vertex is restricted to half of its cyclic orders, since reversing
    every rotation preserves genus. Raises :class:`BudgetExceeded` (with the
    partial minimum, an upper bound) when more than ``budget`` systems
    would be needed.
    """
    if G.num_nodes == 0 or not G.is_connected():
        raise Disconnected("minimum genus needs a connected nonempty graph")
    n = 2 * G.num_links
    alpha = [d ^ 1 for d in range(n)]
    darts_at = [[] for _ in range(G.num_nodes)]
    for j, (u, v) in enumerate(G.links):
        darts_at[u].append(2 * j)
        darts_at[v].append(2 * j + 1)
    first_free = next((v for v, ds in enumerate(darts_at) if len(ds) >= 3), None)
    total = math.prod(_num_orders(len(ds), v == first_free) for v, ds in enumerate(darts_at))
    V, E = G.num_nodes, G.num_links

    if total > budget:
        partial = _min_genus_chunk(n, alpha, V, E, darts_at, first_free, limit=budget)
        raise BudgetExceeded(
            "%d rotation systems exceed budget %d" % (total, budget), partial=partial
        )
    if jobs <= 1 or first_free is None:
        return _min_genus_chunk(n, alpha, V, E, darts_at, first_free)

    heads = list(_vertex_orders(darts_at[first_free], True))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_min_genus_chunk, n, alpha, V, E, darts_at, first_free, o)
                   for o in heads]
        return min(f.result() for f in futures)
