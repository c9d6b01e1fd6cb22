"""Lower bounds for the number of double points of an immersed spanning graph.

The image of a spanning ribbon graph on a genus-``g`` surface needs at least
``max(g, crs(G))`` double points, ``crs`` being the planar crossing number
of the underlying abstract graph. Crossing numbers come from a small table,
an exhaustive planarization search, or the Euler bound ``E - 3V + 6``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import networkx as nx

from .errors import BudgetExceeded, UnknownGraph
from .multigraph import AbstractMultigraph

CROSSING_TABLE = {"K5": 1, "K6": 3, "K7": 9}


@dataclass(frozen=True)
class CrossingNumber:
    value: int
    exact: bool           # False: ``value`` is only a lower bound


@dataclass(frozen=True)
class BoundsReport:
    genus_bound: int
    crossing_bound: int
    crossing_source: str  # "table", "exact" or "euler"
    crossing_exact: bool
    combined: int
    equality_possible: bool | None


def euler_crossing_lower_bound(G: AbstractMultigraph) -> int:
    S = G.simple_support() if not G.is_simple() else G
    V, E = S.num_nodes, S.num_links
    if V < 3:
        return 0
    return max(0, E - 3 * V + 6)


def _is_planar(num_nodes, links) -> bool:
    H = nx.Graph()
    H.add_nodes_from(range(num_nodes))
    H.add_edges_from(links)
    return nx.check_planarity(H)[0]


def _planarizations(S: AbstractMultigraph, k: int):
    """Planarized link lists for every choice of k crossings with edge orders.

    Only pairs of non-adjacent edges cross, each pair at most once; some
    drawing with the fewest crossings has this form.
    """
    links = S.links
    pairs = [
        (i, j) for i, j in combinations(range(len(links)), 2)
        if not set(links[i]) & set(links[j])
    ]
    for chosen in combinations(pairs, k):
        on_edge = {}
        for x, (i, j) in enumerate(chosen):
            on_edge.setdefault(i, []).append(x)
            on_edge.setdefault(j, []).append(x)
        busy = sorted(on_edge)
        for orders in product(*(permutations(on_edge[e]) for e in busy)):
            order_of = dict(zip(busy, orders))
            out = []
            for e, (u, v) in enumerate(links):
                chain = [u] + [S.num_nodes + x for x in order_of.get(e, ())] + [v]
                out.extend(zip(chain, chain[1:]))
            yield S.num_nodes + k, out


def crossing_number_small(G: AbstractMultigraph, max_k: int = 4, budget: int = 200_000) -> CrossingNumber:
    """Least k <= max_k such that G has a drawing with k crossings.

    Loops and parallel links are stripped first. Returns an inexact
    ``CrossingNumber(max_k + 1)`` when no drawing with at most ``max_k``
    crossings exists. More than ``budget`` planarity tests raise
    :class:`BudgetExceeded` whose ``partial`` is the lower bound reached.
    """
    S = G.simple_support() if not G.is_simple() else G
    lower = euler_crossing_lower_bound(S)
    if lower > max_k:
        return CrossingNumber(lower, False)
    tests = 0
    for k in range(lower, max_k + 1):
        for num_nodes, links in _planarizations(S, k):
            tests += 1
            if tests > budget:
                raise BudgetExceeded("crossing search exceeded %d planarity tests" % budget, partial=k)
            if _is_planar(num_nodes, links):
                return CrossingNumber(k, True)
    return CrossingNumber(max_k + 1, False)


def complete_graph_name(G: AbstractMultigraph) -> str | None:
    """``"Kn"`` if the simple support of G is a complete graph."""
    n = G.num_nodes
    S = AbstractMultigraph(n, tuple(sorted({l for l in G.links if l[0] != l[1]})))
    if n >= 1 and S.num_links == n * (n - 1) // 2:
        return "K%d" % n
    return None


def known_crossing_table(name: str) -> int:
    """Crossing numbers of small complete graphs (crs(K7) = 9 is classical)."""
    try:
        return CROSSING_TABLE[name]
    except KeyError:
        raise UnknownGraph("no tabulated crossing number for %r" % (name,)) from None


def _crossing_bound(G: AbstractMultigraph, max_k: int, budget: int):
    name = complete_graph_name(G)
    if name in CROSSING_TABLE:
        return known_crossing_table(name), "table", True
    if not G.is_simple():
        G = G.simple_support()
    euler = euler_crossing_lower_bound(G)
    try:
        res = crossing_number_small(G, max_k, budget)
    except BudgetExceeded as exc:
        res = CrossingNumber(exc.partial, False)
    if res.exact:
        return res.value, "exact", True
    if res.value > euler:
        return res.value, "exact", False
    return euler, "euler", False


def _equality(genus: int, crossing: int, exact: bool):
    if crossing > genus:
        return False
    if exact:
        return True
    return None


def self_intersection_lower_bound(genus: int, G: AbstractMultigraph, max_k: int = 4,
                                  budget: int = 200_000) -> BoundsReport:
    """``max(genus, crs(G))`` with the best crossing information available.

    Also covers 2-coloured realizations, passing the ribbon genus as ``genus``.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    crossing, source, exact = _crossing_bound(G, max_k, budget)
    return BoundsReport(
        genus_bound=genus,
        crossing_bound=crossing,
        crossing_source=source,
        crossing_exact=exact,
        combined=max(genus, crossing),
        equality_possible=_equality(genus, crossing, exact),
    )


def equality_necessary_condition(genus: int, G: AbstractMultigraph, max_k: int = 4,
                                 budget: int = 200_000) -> bool | None:
    """Whether ``crs(G) <= genus`` holds: True, False, or None if undecided."""
    crossing, _, exact = _crossing_bound(G, max_k, budget)
    return _equality(genus, crossing, exact)
