"""The branched covering of the sphere induced by an immersed graph.

The immersed graph is thickened to a ribbon surface ``N``; every boundary
circle of ``N`` is an immersed circle in the sphere, which is capped off by
its Seifert filling. The result is a closed surface ``Y`` with a map to the
sphere whose only branch points are the band midpoints of the fillings.

Boundary strands are tracked through the diagram map. The strand of ``N``
running along theta dart ``p`` belongs to the face of ``p``; at a crossing
with rotation ``(d0 d1 d2 d3)`` the strand entering through ``di`` passes
the corners ``(di, di+1)`` and then ``(di+1, di+2)``. Each corner is one
intersection point of two boundary strands, labelled by its first dart.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import NamedTuple

from .diagram import SphericalDiagram, extract_theta
from .errors import Disconnected, NegativeRamification
from .ribbon import is_connected, surface_invariants
from .seifert import ImmersedCircleWord, SeifertData, fill_surface


@dataclass(frozen=True)
class BoundaryCircle:
    face_cycle: tuple[int, ...]
    self_crossing_word: ImmersedCircleWord
    seifert: SeifertData


@dataclass(frozen=True)
class CoveringResult:
    chi_N: int
    circles: tuple[BoundaryCircle, ...]
    chi_Y: int
    genus_Y: int
    branch_count: int
    degree: int


class StrandPoint(NamedTuple):
    """Intersection of two boundary strands at a crossing corner."""

    label: int
    circles: tuple[int, int]


def _strand_events(d: SphericalDiagram):
    """For each boundary circle, the corner labels met in order."""
    im = extract_theta(d)
    m = d.map
    faces = im.theta.faces
    events = []
    for face in faces:
        seq = []
        for p in face:
            for ps in im.edge_paths[p]:
                e = ps.entry
                seq.append(e)
                seq.append(m.sigma[e])
        events.append(seq)
    return im, faces, events


def intersection_points(d: SphericalDiagram) -> list[StrandPoint]:
    """All strand intersections, four per crossing, with the circles involved."""
    _, _, events = _strand_events(d)
    owners = defaultdict(list)
    for k, seq in enumerate(events):
        for label in seq:
            owners[label].append(k)
    return [StrandPoint(label, tuple(ks)) for label, ks in sorted(owners.items())]


def boundary_circles(d: SphericalDiagram, coorientation: str = "positive") -> list[BoundaryCircle]:
    im, faces, events = _strand_events(d)
    owners = defaultdict(set)
    for k, seq in enumerate(events):
        for label in seq:
            owners[label].add(k)
    circles = []
    for k, (face, seq) in enumerate(zip(faces, events)):
        word = ImmersedCircleWord(tuple(x for x in seq if owners[x] == {k}))
        circles.append(BoundaryCircle(tuple(face), word, fill_surface(word, coorientation)))
    return circles


def build_covering(d: SphericalDiagram) -> CoveringResult:
    im = extract_theta(d)
    if not is_connected(im.theta):
        raise Disconnected("the immersed graph is disconnected")
    inv = surface_invariants(im.theta)
    circles = tuple(boundary_circles(d))
    chi_N = inv.num_vertices - inv.num_edges
    chi_Y = chi_N + sum(c.seifert.euler_characteristic_sigma for c in circles)
    B = sum(c.seifert.branch_points for c in circles)
    return CoveringResult(
        chi_N=chi_N,
        circles=circles,
        chi_Y=chi_Y,
        genus_Y=1 - chi_Y // 2,
        branch_count=B,
        degree=(chi_Y + B) // 2,
    )


def check_riemann_hurwitz(r: CoveringResult) -> bool:
    return r.branch_count == 2 * r.degree + 2 * r.genus_Y - 2


def total_ramification(degree: int, genus: int) -> int:
    """``sum (e_p - 1)`` forced by Riemann-Hurwitz for a map to the sphere."""
    total = 2 * degree + 2 * genus - 2
    if degree < 1 or total < 0:
        raise NegativeRamification("degree %d and genus %d give total %d" % (degree, genus, total))
    return total


def ramification_distributions(degree: int, genus: int, realizable: bool = False) -> list[tuple[int, ...]]:
    """Ways to split the total ramification among distinct branch values.

    Each entry is a partition (largest part first); a part is the
    contribution ``sum (e_p - 1)`` over the fibre of one branch value. With
    ``realizable`` the parts are capped at ``degree - 1``, the most a single
    fibre of a degree-``degree`` map can carry.
    """
    total = total_ramification(degree, genus)
    cap = degree - 1 if realizable else total
    out = []

    def rec(left, largest, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for part in range(min(left, largest), 0, -1):
            rec(left - part, part, acc + [part])

    if total == 0:
        return [()]
    if cap >= 1:
        rec(total, cap, [])
    return out


def check_region_formula(chi_S: int, degree_S: int, ramification) -> bool:
    """Riemann-Hurwitz over a closed disk: ``chi_S == degree_S - sum(e - 1)``.

    For a disk mapped with degree 1 this forces an empty ramification list.
    """
    ramification = list(ramification)
    if any(e < 2 for e in ramification):
        raise ValueError("ramification indices of branch points are at least 2")
    return chi_S == degree_S - sum(e - 1 for e in ramification)
