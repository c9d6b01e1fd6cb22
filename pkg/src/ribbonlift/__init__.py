"""Ribbon graphs, immersed graphs in the sphere and the branched coverings they induce."""

from .bounds import (
    BoundsReport,
    crossing_number_small,
    equality_necessary_condition,
    euler_crossing_lower_bound,
    known_crossing_table,
    self_intersection_lower_bound,
)
from .defect import DefectReport, defect_against, is_three_connected, min_defect, planarity_and_rotation
from .diagram import (
    ImmersedGraph,
    SphericalDiagram,
    crossing_count,
    extract_theta,
    remove_edge_self_crossings,
    resolve_all_crossings,
    restore_all,
    restore_crossing,
    validate_diagram,
)
from .errors import RibbonLiftError
from .formats import emit_diagram, emit_ribbon, emit_word, parse_diagram, parse_ribbon, parse_word
from .lift import (
    CoveringResult,
    boundary_circles,
    build_covering,
    check_region_formula,
    check_riemann_hurwitz,
    ramification_distributions,
    total_ramification,
)
from .multigraph import AbstractMultigraph
from .ribbon import (
    RibbonGraph,
    SurfaceInvariants,
    canonical_bouquet,
    connected_components,
    make_trivalent,
    min_genus_over_rotations,
    orbits,
    reverse_vertex_rotation,
    rotation_from_colours,
    surface_invariants,
    underlying_abstract_graph,
    validate_ribbon_graph,
    wedge_at_vertex,
)
from .seifert import ImmersedCircleWord, SeifertData, fill_surface, oriented_smoothing_count

__version__ = "0.1.0"
