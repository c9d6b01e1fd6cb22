"""
Genus of a ribbon graph
=======================

A rotation system is two permutations of the darts: sigma turns around
each vertex, alpha swaps the two ends of each edge. Faces are the cycles
of sigma after alpha, and the genus falls out of Euler's formula.
"""

from ribbonlift import fixtures, orbits, reverse_vertex_rotation, surface_invariants

# the theta graph drawn in the plane
theta = fixtures.load("theta_planar.ribbon")
print(theta)
print("faces:", orbits(theta, "face"))
print(surface_invariants(theta))

# turn the second vertex around: one long face, and a torus
twisted = reverse_vertex_rotation(theta, 3)
print("faces:", orbits(twisted, "face"))
print("genus", surface_invariants(twisted).genus)

# K7 sits on the torus with 14 triangular faces
k7 = fixtures.load("k7_torus.ribbon")
inv = surface_invariants(k7)
print("K7: V=%d E=%d F=%d genus=%d" % (inv.num_vertices, inv.num_edges, inv.num_faces, inv.genus))
