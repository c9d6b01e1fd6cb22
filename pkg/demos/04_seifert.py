"""
Seifert circles of an immersed circle
=====================================

Smoothing every double point along the orientation splits the curve into
m disjoint circles. Gluing m disks with one twisted band per crossing
gives a surface with a single boundary circle.
"""

from ribbonlift import ImmersedCircleWord, fill_surface

for text in ["", "A A", "A B A B", "A B C A B C", "A A B B", "A B C D A D C B"]:
    s = fill_surface(ImmersedCircleWord.parse(text))
    print("%-18r m=%d d=%d chi=%d genus=%d" % (text, s.num_seifert_circles, s.num_crossings,
                                              s.euler_characteristic_sigma, s.genus_sigma))
