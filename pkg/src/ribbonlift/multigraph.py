"""Abstract multigraphs: nodes ``0..n-1`` and an ordered tuple of links.

Loops and parallel links are allowed. A link is stored as a pair ``(u, v)``
with ``u <= v``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .errors import ReductionWarning


@dataclass(frozen=True)
class AbstractMultigraph:
    num_nodes: int
    links: tuple[tuple[int, int], ...]

    def __post_init__(self):
        links = tuple((min(u, v), max(u, v)) for u, v in self.links)
        for u, v in links:
            if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes):
                raise ValueError("link (%d, %d) out of range" % (u, v))
        object.__setattr__(self, "links", links)

    @classmethod
    def from_networkx(cls, G) -> "AbstractMultigraph":
        nodes = sorted(G.nodes())
        index = {x: i for i, x in enumerate(nodes)}
        links = [(index[u], index[v]) for u, v in G.edges()]
        return cls(len(nodes), tuple(sorted(links)))

    @property
    def num_links(self) -> int:
        return len(self.links)

    def valences(self) -> list[int]:
        val = [0] * self.num_nodes
        for u, v in self.links:
            val[u] += 1
            val[v] += 1
        return val

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.links) and len(set(self.links)) == len(self.links)

    def is_connected(self) -> bool:
        if self.num_nodes == 0:
            return True
        return nx.is_connected(self.to_networkx())

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.num_nodes))
        G.add_edges_from(self.links)
        return G

    def simple_support(self) -> "AbstractMultigraph":
        """Drop loops and merge parallel links, warning if anything changed."""
        kept = sorted({(u, v) for u, v in self.links if u != v})
        dropped = len(self.links) - len(kept)
        if dropped:
            warnings.warn(
                "reduced to simple support: removed %d loop/parallel link(s)" % dropped,
                ReductionWarning,
                stacklevel=2,
            )
        return AbstractMultigraph(self.num_nodes, tuple(kept))

    def canonical(self) -> "AbstractMultigraph":
        return AbstractMultigraph(self.num_nodes, tuple(sorted(self.links)))


def complete_graph(n: int) -> AbstractMultigraph:
    return AbstractMultigraph(n, tuple(combinations(range(n), 2)))


def complete_bipartite_graph(m: int, n: int) -> AbstractMultigraph:
    return AbstractMultigraph(m + n, tuple((i, m + j) for i in range(m) for j in range(n)))


def cube_graph() -> AbstractMultigraph:
    return AbstractMultigraph.from_networkx(nx.hypercube_graph(3))


def bouquet_graph(num_loops: int) -> AbstractMultigraph:
    return AbstractMultigraph(1, ((0, 0),) * num_loops)


def theta_graph() -> AbstractMultigraph:
    return AbstractMultigraph(2, ((0, 1),) * 3)
