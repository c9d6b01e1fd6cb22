"""
Spanning graphs of every genus
==============================

The bouquet a1 b1 a1' b1' ... cuts a genus-g surface into one disk.
Blowing up each vertex into a small polygon makes any ribbon graph
trivalent without touching the surface.
"""

from ribbonlift import canonical_bouquet, make_trivalent, surface_invariants, wedge_at_vertex
from ribbonlift.ribbon import min_genus_over_rotations
from ribbonlift.multigraph import complete_bipartite_graph, complete_graph

for g in range(1, 5):
    b = canonical_bouquet(g)
    t = make_trivalent(b)
    print("g=%d  bouquet faces=%d  trivalent V=%d E=%d genus=%d"
          % (g, surface_invariants(b).num_faces, len(t.vertices), len(t.edges),
             surface_invariants(t).genus))

# loops wedged into a corner bound their own little faces
b = wedge_at_vertex(canonical_bouquet(1), 0, 2, 0)
print(b, surface_invariants(b))

# smallest genus over all rotation systems, by brute force
for name, G in [("K4", complete_graph(4)), ("K5", complete_graph(5)),
                ("K3,3", complete_bipartite_graph(3, 3))]:
    print(name, "min genus", min_genus_over_rotations(G))
