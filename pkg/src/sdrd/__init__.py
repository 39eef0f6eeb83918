"""Signed double Roman domination toolkit for cubic and subcubic graphs."""

from .graphs import (
    FamilySpec,
    Graph,
    build_block_graph,
    build_flower_snark,
    build_grid,
    build_petersen,
    parse_edge_list,
    serialize_edge_list,
)
from .labeling import (
    LABEL_VALUES,
    Labeling,
    ValidationReport,
    labeling_from_csv,
    labeling_to_csv,
    preimage_sets,
    validate,
    validate_cubic_equiv,
    weight,
)
from .solver import (
    SizeLimitError,
    SolveResult,
    SolveSpec,
    brute_force,
    solve_bnb,
    solve_strip_dp,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
