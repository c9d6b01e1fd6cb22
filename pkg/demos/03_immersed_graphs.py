"""
Immersed graphs and their branched coverings
============================================

A diagram is a plane map where some 4-valent vertices are crossings.
Reading the rotation off the sphere gives a ribbon graph Theta. Its
thickening has boundary circles that are immersed in the sphere; capping
each with its Seifert surface gives a closed surface Y that covers the
sphere, branched once per band.
"""

import random

from ribbonlift import build_covering, extract_theta, fixtures, restore_all
from ribbonlift.ribbon import genus
from ribbonlift.sampling import random_diagram

d = fixtures.load("bouquet_one_crossing.diagram")
im = extract_theta(d)
print("Theta:", im.theta, "genus", genus(im.theta))

# undo the crossings one by one: each step adds at most one handle
print("genus along the way:", [genus(g) for g in restore_all(d)])

r = build_covering(d)
for c in r.circles:
    print("  circle", c.face_cycle, "word", c.self_crossing_word, "m=%d d=%d"
          % (c.seifert.num_seifert_circles, c.seifert.num_crossings))
print("Y: genus %d, degree %d, %d branch points" % (r.genus_Y, r.degree, r.branch_count))
print("2*deg + 2*g - 2 =", 2 * r.degree + 2 * r.genus_Y - 2)

# a few random ones
rng = random.Random(0)
for k in (1, 2, 3, 4):
    r = build_covering(random_diagram(rng, k))
    print("%d crossings -> genus %d, degree %d, B=%d" % (k, r.genus_Y, r.degree, r.branch_count))
