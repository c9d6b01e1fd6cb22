"""Immersed graphs in the sphere, stored as plane maps with flagged crossings.

A :class:`SphericalDiagram` is a genus-0 ribbon graph (the drawing, with
every transverse double point turned into a vertex) together with the set
of vertices that are crossings. A crossing with rotation ``(d0 d1 d2 d3)``
carries the two strands ``{d0, d2}`` and ``{d1, d3}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    BadTrueVertex,
    ClosedStrand,
    CrossingValence,
    Disconnected,
    NotFourValent,
    NotGenusZero,
)
from .ribbon import (
    RibbonGraph,
    is_connected,
    surface_invariants,
    validate_ribbon_graph,
)


@dataclass(frozen=True)
class SphericalDiagram:
    map: RibbonGraph
    crossings: frozenset = field(default=frozenset())

    def __post_init__(self):
        reps = frozenset(self.map.vertex_rep(d) for d in self.crossings)
        object.__setattr__(self, "crossings", reps)

    def is_crossing(self, d: int) -> bool:
        return self.map.vertex_rep(d) in self.crossings


class Passage(NamedTuple):
    """One traversal of a crossing: enter through dart ``entry``, leave through ``exit``."""

    crossing: int
    entry: int
    exit: int


class CrossingRecord(NamedTuple):
    """A crossing seen from the abstract graph.

    ``strands`` holds, for the strand pairs ``{d0, d2}`` and ``{d1, d3}``,
    a triple ``(edge, position, length)``: the theta edge (named by its
    smaller theta dart), the 1-based index of this crossing along that
    edge's path, and the path length.
    """

    vertex: int
    darts: tuple[int, int, int, int]
    strands: tuple[tuple[int, int, int], tuple[int, int, int]]

    @property
    def edges(self) -> tuple[int, int]:
        return (self.strands[0][0], self.strands[1][0])

    @property
    def same_edge(self) -> bool:
        return self.strands[0][0] == self.strands[1][0]


@dataclass(frozen=True)
class ImmersedGraph:
    theta: RibbonGraph
    theta_darts: tuple[int, ...]        # theta dart -> dart of the diagram map
    edge_paths: dict                    # theta dart -> tuple of Passage, in that dart's direction
    crossings: tuple[CrossingRecord, ...]


# ---------------------------------------------------------------------------

def _through(m: RibbonGraph, d: int) -> int:
    """Opposite dart at a 4-valent vertex."""
    return m.sigma[m.sigma[d]]


def validate_diagram(d: SphericalDiagram) -> None:
    m = d.map
    validate_ribbon_graph(m, allow_low_valence=True)
    if not is_connected(m):
        raise Disconnected("diagram map is disconnected")
    g = surface_invariants(m).genus
    if g != 0:
        raise NotGenusZero("diagram map has genus %d" % g)
    for cyc in m.vertices:
        flagged = cyc[0] in d.crossings
        if flagged and len(cyc) != 4:
            raise CrossingValence("crossing at dart %d has valence %d" % (cyc[0], len(cyc)))
        if not flagged and len(cyc) < 3:
            raise BadTrueVertex("vertex at dart %d has valence %d" % (cyc[0], len(cyc)))
    if len(d.crossings) == len(m.vertices):
        raise ClosedStrand("diagram has no true vertices")
    for cyc in m.vertices:
        if cyc[0] not in d.crossings:
            continue
        for start in cyc:
            x = start
            for _ in range(m.num_darts):
                y = m.alpha[_through(m, x)]
                if not d.is_crossing(y):
                    break
                x = y
                if x == start:
                    raise ClosedStrand("strand through dart %d meets no true vertex" % start)


def crossing_count(d: SphericalDiagram) -> int:
    return len(d.crossings)


def _walk(m: RibbonGraph, crossings, x: int):
    """Follow a true-vertex dart through crossings; return (end dart, passages)."""
    path = []
    q = m.alpha[x]
    while m.vertex_rep(q) in crossings:
        out = _through(m, q)
        path.append(Passage(m.vertex_rep(q), q, out))
        q = m.alpha[out]
    return q, tuple(path)


def extract_theta(d: SphericalDiagram) -> ImmersedGraph:
    """The abstract graph with the ribbon structure induced by the sphere."""
    validate_diagram(d)
    m = d.map
    true_darts = [x for x in range(m.num_darts) if not d.is_crossing(x)]
    index = {x: i for i, x in enumerate(true_darts)}
    n = len(true_darts)
    sigma = [index[m.sigma[x]] for x in true_darts]
    alpha = [0] * n
    paths = {}
    for i, x in enumerate(true_darts):
        end, path = _walk(m, d.crossings, x)
        alpha[i] = index[end]
        paths[i] = path
    theta = RibbonGraph(tuple(sigma), tuple(alpha))

    seen = {}
    for p in range(n):
        if p > alpha[p]:
            continue
        path = paths[p]
        for k, (c, entry, _exit) in enumerate(path):
            slot = 0 if entry in (m.vertex_cycle(c)[0], m.vertex_cycle(c)[2]) else 1
            seen.setdefault(c, {})[slot] = (p, k + 1, len(path))
    records = []
    for c in sorted(seen):
        cyc = m.vertex_cycle(c)
        records.append(CrossingRecord(c, tuple(cyc), (seen[c][0], seen[c][1])))
    return ImmersedGraph(theta, tuple(true_darts), paths, tuple(records))


def resolve_all_crossings(d: SphericalDiagram) -> RibbonGraph:
    """Forget the crossing flags: every double point becomes a 4-valent vertex."""
    return d.map


def _compact(m_sigma, m_alpha, keep, flags, colours=()):
    keep = sorted(keep)
    new = {x: i for i, x in enumerate(keep)}
    g = RibbonGraph(
        tuple(new[m_sigma[x]] for x in keep),
        tuple(new[m_alpha[x]] for x in keep),
        {new[x]: c for x, c in colours if x in new},
    )
    return g, frozenset(g.vertex_rep(new[f]) for f in flags)


def restore_crossing(h, v: int, flags=()):
    """Turn the 4-valent vertex containing dart ``v`` back into a crossing.

    ``h`` is a :class:`RibbonGraph` or a :class:`SphericalDiagram` (whose
    other flags are then carried along). The vertex is deleted and the
    edges through opposite darts are spliced. Remaining darts are renumbered
    in increasing order; returns ``(graph, remaining_flags)`` with the flags
    expressed as least darts of their vertices in the new numbering.
    """
    if isinstance(h, SphericalDiagram):
        flags = set(h.crossings) | set(flags)
        h = h.map
    cyc = h.vertex_cycle(v)
    if len(cyc) != 4:
        raise NotFourValent("vertex at dart %d has valence %d" % (v, len(cyc)))
    removed = set(cyc)
    partner = {cyc[0]: cyc[2], cyc[2]: cyc[0], cyc[1]: cyc[3], cyc[3]: cyc[1]}
    alpha = list(h.alpha)
    for a in range(h.num_darts):
        if a in removed or h.alpha[a] not in removed:
            continue
        x = h.alpha[a]
        for _ in range(4):
            y = h.alpha[partner[x]]
            if y not in removed:
                alpha[a] = y
                break
            x = y
        else:
            raise ClosedStrand("strand through dart %d closes up at the crossing" % v)
    rest = [f for f in flags if h.vertex_rep(f) != h.vertex_rep(v)]
    keep = [x for x in range(h.num_darts) if x not in removed]
    return _compact(h.sigma, alpha, keep, rest, h.colours)


def restore_all(d: SphericalDiagram, order=None):
    """Restore crossings one at a time; return the list of intermediate graphs.

    ``order`` lists crossings by any of their darts in the diagram's
    numbering (default: canonical order). The first entry is the resolved
    map, the last one equals ``extract_theta(d).theta``.
    """
    validate_diagram(d)
    order = sorted(d.crossings) if order is None else list(order)
    if sorted(d.map.vertex_rep(x) for x in order) != sorted(d.crossings):
        raise ValueError("order must list every crossing exactly once")
    current = {c: c for c in d.crossings}     # original crossing -> dart now
    g = d.map
    steps = [g]
    for c in order:
        target = current.pop(d.map.vertex_rep(c))
        gone = g.vertex_rep(target)
        new = {x: i for i, x in enumerate(x for x in range(g.num_darts) if g.vertex_rep(x) != gone)}
        g, _ = restore_crossing(g, target)
        current = {k: new[x] for k, x in current.items()}
        steps.append(g)
    return steps


# ---------------------------------------------------------------------------
# removing self-crossings of single edges
# ---------------------------------------------------------------------------

def same_edge_crossings(d: SphericalDiagram) -> list[int]:
    return [r.vertex for r in extract_theta(d).crossings if r.same_edge]


def _rebuild(d: SphericalDiagram, im: ImmersedGraph, paths) -> SphericalDiagram:
    """Reassemble the map from edge paths whose passages are a subset of the old ones."""
    m = d.map
    alpha = list(m.alpha)
    for p, path in paths.items():
        seq = [im.theta_darts[p]]
        for ps in path:
            seq += [ps.entry, ps.exit]
        seq.append(im.theta_darts[im.theta.alpha[p]])
        for a, b in zip(seq[::2], seq[1::2]):
            alpha[a], alpha[b] = b, a
    alive = {ps.crossing for path in paths.values() for ps in path}
    keep = [x for x in range(m.num_darts)
            if m.vertex_rep(x) not in d.crossings or m.vertex_rep(x) in alive]
    g, flags = _compact(m.sigma, alpha, keep, alive, m.colours)
    return SphericalDiagram(g, flags)


def remove_edge_self_crossings(d: SphericalDiagram) -> SphericalDiagram:
    """Remove every crossing of an edge with itself.

    The crossing is smoothed so that the edge skips the loop between its two
    passages, and the loop is erased; other strands that crossed the loop now
    run straight through. Innermost loops go first (shortest loop, then least
    dart), so nested kinks unwind one at a time. The abstract graph and its
    induced rotation do not change.
    """
    validate_diagram(d)
    while True:
        im = extract_theta(d)
        best = None
        for p, path in im.edge_paths.items():
            if p > im.theta.alpha[p]:
                continue
            first = {}
            for k, ps in enumerate(path):
                if ps.crossing in first:
                    i = first[ps.crossing]
                    key = (k - i, ps.crossing)
                    if best is None or key < best[0]:
                        best = (key, p, i, k)
                else:
                    first[ps.crossing] = k
        if best is None:
            return d
        _, p, i, k = best
        path = im.edge_paths[p]
        dropped = {ps.crossing for ps in path[i:k + 1]}
        paths = {}
        for q, qpath in im.edge_paths.items():
            if q > im.theta.alpha[q]:
                continue
            if q == p:
                qpath = qpath[:i] + qpath[k + 1:]
            paths[q] = tuple(ps for ps in qpath if ps.crossing not in dropped)
        d = _rebuild(d, im, paths)
        validate_diagram(d)
