from app.planarize.descent import (
    BasisDescent,
    DescentStep,
    PlanarResult,
    cubic_descent,
    fragmentary_greedy,
    steepest_descent_basis,
)
from app.planarize.search import (
    EvolutionResult,
    crossover_merge,
    evolutionary_search,
    planarize_from_random_basis,
    planarize_permutation,
    random_restart_pipeline,
)

__all__ = [
    "BasisDescent",
    "DescentStep",
    "EvolutionResult",
    "PlanarResult",
    "crossover_merge",
    "cubic_descent",
    "evolutionary_search",
    "fragmentary_greedy",
    "planarize_from_random_basis",
    "planarize_permutation",
    "random_restart_pipeline",
    "steepest_descent_basis",
]
