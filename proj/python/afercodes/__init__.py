"""Error-coefficient bounds for Griesmer optimal linear codes."""

from ._core import (
    adic_anti_expansion,
    afer_estimate,
    build_database,
    combined_bound,
    construct,
    enumerate_file,
    gamma,
    griesmer_length,
    griesmer_max_distance,
    two_dim_optimal,
)

__all__ = [
    "adic_anti_expansion",
    "afer_estimate",
    "build_database",
    "combined_bound",
    "construct",
    "enumerate_file",
    "gamma",
    "griesmer_length",
    "griesmer_max_distance",
    "two_dim_optimal",
]
