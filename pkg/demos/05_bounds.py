"""
How many double points are forced
=================================

An immersed spanning graph needs at least as many crossings as the genus
it spans, and at least the crossing number of the graph. For K7 on the
torus the second bound wins by a lot.
"""

from ribbonlift import (crossing_number_small, equality_necessary_condition,
                        euler_crossing_lower_bound, fixtures, self_intersection_lower_bound,
                        underlying_abstract_graph)
from ribbonlift.multigraph import complete_bipartite_graph, complete_graph

for name, G in [("K4", complete_graph(4)), ("K5", complete_graph(5)),
                ("K3,3", complete_bipartite_graph(3, 3))]:
    print(name, "euler", euler_crossing_lower_bound(G), "crs", crossing_number_small(G).value)

# K6 needs the search to go up to three crossings
print("K6 crs", crossing_number_small(complete_graph(6), max_k=3))

k7 = underlying_abstract_graph(fixtures.load("k7_torus.ribbon"))
print(self_intersection_lower_bound(1, k7))
print("can the bound be sharp?", equality_necessary_condition(1, k7))
