"""Planar embeddings and the defect of a prescribed rotation system.

The defect of a planar embedding is the number of vertices where the
prescribed cyclic order and the one read off the embedding differ. For a
3-connected planar graph the only embeddings are one rotation system and
its mirror, so the minimal defect is the smaller of the two comparisons.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .errors import AlphaMismatch, DartSetMismatch, NotPlanar, ReductionWarning
from .multigraph import AbstractMultigraph
from .ribbon import RibbonGraph, genus, mirror, underlying_abstract_graph


@dataclass(frozen=True)
class DefectReport:
    delta_plus: int
    delta_minus: int
    minimum: int
    exact: bool = True        # False when the graph is not 3-connected


def _planar_rotation(n: int, alpha, dart_node) -> RibbonGraph:
    """Genus-0 rotation on the given darts, or NotPlanar.

    Each edge is subdivided (loops twice) so that the planarity test sees a
    simple graph whose neighbours at an original node are exactly its darts.
    """
    H = nx.Graph()
    H.add_nodes_from(("v", v) for v in set(dart_node))
    for a in range(n):
        b = alpha[a]
        if a > b:
            continue
        if dart_node[a] == dart_node[b]:
            H.add_edges_from([(("v", dart_node[a]), ("d", a)), (("d", a), ("d", b)),
                              (("d", b), ("v", dart_node[b]))])
        else:
            H.add_edges_from([(("v", dart_node[a]), ("d", a)), (("d", a), ("v", dart_node[b]))])
    ok, emb = nx.check_planarity(H, counterexample=True)
    if not ok:
        witness = sorted((str(u), str(v)) for u, v in emb.edges())
        raise NotPlanar("graph is not planar", certificate=witness)
    sigma = list(range(n))
    dart_of = {}
    for a in range(n):
        b = alpha[a]
        if dart_node[a] == dart_node[b]:
            dart_of[dart_node[a], ("d", a)] = a
        else:
            dart_of[dart_node[a], ("d", min(a, b))] = a
    for v in set(dart_node):
        # networkx lists neighbours clockwise; rotations are counterclockwise
        ring = [dart_of[v, w] for w in reversed(list(emb.neighbors_cw_order(("v", v))))]
        for i, a in enumerate(ring):
            sigma[a] = ring[(i + 1) % len(ring)]
    g = RibbonGraph(tuple(sigma), tuple(alpha))
    m = mirror(g)
    # a fixed orientation, independent of how the planarity test drew it
    return min(g, m, key=lambda r: r.sigma)


def planarity_and_rotation(G) -> RibbonGraph:
    """A genus-0 rotation system on G, or raise NotPlanar with a Kuratowski witness.

    ``G`` is an :class:`AbstractMultigraph` (link ``j`` gives darts ``2j`` and
    ``2j+1``) or a :class:`RibbonGraph`, whose darts and edges are then kept.
    Of the embedding and its mirror, the one with the lexicographically
    smaller rotation array is returned.
    """
    if isinstance(G, RibbonGraph):
        return _planar_rotation(G.num_darts, G.alpha, G.vertex_index)
    n = 2 * G.num_links
    alpha = tuple(d ^ 1 for d in range(n))
    dart_node = [0] * n
    for j, (u, v) in enumerate(G.links):
        dart_node[2 * j], dart_node[2 * j + 1] = u, v
    return _planar_rotation(n, alpha, dart_node)


def is_three_connected(G: AbstractMultigraph) -> bool:
    """Brute force: at least 4 nodes and connected after deleting any two."""
    S = G if G.is_simple() else G.simple_support()
    n = S.num_nodes
    if n < 4:
        return False
    H = nx.Graph()
    H.add_nodes_from(range(n))
    H.add_edges_from(S.links)
    if not nx.is_connected(H):
        return False
    for pair in combinations(range(n), 2):
        K = H.copy()
        K.remove_nodes_from(pair)
        if not nx.is_connected(K):
            return False
    return True


def defect_against(prescribed: RibbonGraph, embedding: RibbonGraph) -> int:
    """Number of vertices whose cyclic orders differ."""
    if prescribed.num_darts != embedding.num_darts:
        raise DartSetMismatch("%d darts against %d" % (prescribed.num_darts, embedding.num_darts))
    if prescribed.alpha != embedding.alpha:
        raise AlphaMismatch("the two rotation systems pair darts differently")
    if sorted(map(sorted, prescribed.vertices)) != sorted(map(sorted, embedding.vertices)):
        raise DartSetMismatch("the two rotation systems group darts into different vertices")
    return sum(
        1 for cyc in prescribed.vertices
        if any(prescribed.sigma[d] != embedding.sigma[d] for d in cyc)
    )


def min_defect(prescribed: RibbonGraph) -> DefectReport:
    """Defect of the prescribed rotation against a planar embedding and its mirror.

    Exact for 3-connected graphs. Otherwise the graph has more planar
    embeddings and the minimum is only an upper bound, unless it is 0.
    A genus-0 prescription is itself an embedding and is used directly.
    """
    if genus(prescribed) == 0:
        emb = min(prescribed, mirror(prescribed), key=lambda r: r.sigma)
    else:
        emb = planarity_and_rotation(prescribed)
    plus = defect_against(prescribed, emb)
    minus = defect_against(prescribed, mirror(emb))
    low = min(plus, minus)
    exact = low == 0 or is_three_connected(underlying_abstract_graph(prescribed))
    if not exact:
        warnings.warn(
            "graph is not 3-connected: other planar embeddings exist, "
            "the reported minimum is an upper bound",
            ReductionWarning,
            stacklevel=2,
        )
    return DefectReport(plus, minus, low, exact)
