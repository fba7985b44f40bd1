from ._core import (
    ConfigError,
    GridSpec,
    cell_entropy,
    normalized_matrix,
    run_demo,
    run_scenario,
    run_sweep,
    unimpeded_matrix,
)

__all__ = [
    "ConfigError",
    "GridSpec",
    "cell_entropy",
    "normalized_matrix",
    "run_demo",
    "run_scenario",
    "run_sweep",
    "unimpeded_matrix",
]
