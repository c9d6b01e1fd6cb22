"""
Defect of a prescribed rotation
===============================

Given a rotation system on a planar graph, count the vertices where it
disagrees with a planar drawing. A 3-connected graph has only one drawing
up to mirror image, so trying both gives the true minimum.
"""

from ribbonlift import fixtures, min_defect, reverse_vertex_rotation
from ribbonlift.ribbon import genus

cube = fixtures.load("cube_planar.ribbon")
for flips in ([], [0], [0, 3], [0, 3, 6, 9]):
    g = cube
    for v in flips:
        g = reverse_vertex_rotation(g, v)
    r = min_defect(g)
    print("reversed %-14s genus %d  delta+ %d  delta- %d  min %d"
          % (flips, genus(g), r.delta_plus, r.delta_minus, r.minimum))
