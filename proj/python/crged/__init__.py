"""Edit distance functions of hereditary graph properties via colored regularity graphs."""

from ._crged import (
    IoError,
    ParseError,
    ResourceError,
    ValidationError,
    __version__,
    bounded_min_g,
    closed_form_gray,
    edit_distance,
    embeds,
    extreme_points,
    g_value,
    gamma,
    graph,
    has_induced,
    is_p_core,
    max_dist_estimate,
    run_cli,
    theorem_value,
)

__all__ = [
    "IoError",
    "ParseError",
    "ResourceError",
    "ValidationError",
    "__version__",
    "bounded_min_g",
    "closed_form_gray",
    "edit_distance",
    "embeds",
    "extreme_points",
    "g_value",
    "gamma",
    "graph",
    "has_induced",
    "is_p_core",
    "max_dist_estimate",
    "run_cli",
    "theorem_value",
]
