from app.gf2.gauss import (
    GaussTrace,
    PlaneConfiguration,
    chord_rows,
    extract_plane_configs,
    modified_gauss,
    parity_independence,
    random_basis_candidate,
    rim_constrained_configs,
    running_string_enumerate,
    transversal_count,
)

__all__ = [
    "GaussTrace",
    "PlaneConfiguration",
    "chord_rows",
    "extract_plane_configs",
    "modified_gauss",
    "parity_independence",
    "random_basis_candidate",
    "rim_constrained_configs",
    "running_string_enumerate",
    "transversal_count",
]
