from app.layout.drawing import Drawing, segments_cross
from app.layout.levels import (
    LevelStructure,
    TopoSection,
    contour_point,
    contour_points,
    level_structure,
    place_on_contour,
    topo_sections,
)
from app.layout.spring import SpringSystem, adjacency_of, assemble_spring_system, iterative_refine, solve_spring

__all__ = [
    "Drawing",
    "LevelStructure",
    "SpringSystem",
    "TopoSection",
    "adjacency_of",
    "assemble_spring_system",
    "contour_point",
    "contour_points",
    "iterative_refine",
    "level_structure",
    "place_on_contour",
    "segments_cross",
    "solve_spring",
    "topo_sections",
]
