from app.reinsert.kbs import KbsRing, chords_cross, conflict_reduce, insert_chords, kbs_ring, project
from app.reinsert.routing import (
    CrossingBounds,
    Route,
    apply_route,
    crossing_lower_bound,
    crossing_upper_informational,
    enumerate_routes,
    insert_vertex,
    minimize_crossings,
    remove_vertex,
    route_edge,
)
from app.reinsert.thickness import Layer, bipartite_thickness_reference, thickness_decompose, thickness_reference

__all__ = [
    "CrossingBounds",
    "KbsRing",
    "Layer",
    "Route",
    "apply_route",
    "bipartite_thickness_reference",
    "chords_cross",
    "conflict_reduce",
    "crossing_lower_bound",
    "crossing_upper_informational",
    "enumerate_routes",
    "insert_chords",
    "insert_vertex",
    "kbs_ring",
    "minimize_crossings",
    "project",
    "remove_vertex",
    "route_edge",
    "thickness_decompose",
    "thickness_reference",
]
