"""Odd colorings of sparse graphs.

A proper coloring is odd when every non-isolated vertex has some color
appearing an odd number of times on its neighborhood.  This package
computes exact maximum average degree with certificates, constructs odd
colorings with guaranteed color counts on sparse graphs, and solves the
exact odd chromatic number on desk-scale instances.
"""

from .coloring import (
    PaletteExhaustedError,
    PartialColoring,
    Violation,
    choose_color,
    coloring_from_json,
    coloring_to_json,
    is_odd_coloring,
)
from .constructive import (
    ColoringResult,
    ReductionExhaustedError,
    ReductionRecord,
    UnsupportedDensityError,
    classify_small,
    color_auto,
    color_cycle,
    color_cycle_graph,
    color_eps,
    color_five,
    color_forest,
    color_six,
    cycle_chi,
    eps_reduction_records,
    find_reducible_five,
    find_reducible_six,
    five_reduction_records,
    kstar_coloring,
    six_reduction_records,
)
from .exact import (
    BudgetExceededError,
    ColorableOutcome,
    SolveBudget,
    brute_force_odd_chromatic,
    chromatic_number,
    degeneracy_order,
    odd_chromatic_number,
    odd_colorable,
)
from .graph import (
    Graph,
    GraphParseError,
    gen_complete,
    gen_cycle,
    gen_cycle_with_leaves,
    gen_kstar,
    gen_path,
    gen_star,
    girth,
    girth_mad_bound,
    parse_dimacs,
    parse_edgelist,
    parse_graph,
    serialize_graph,
    subdivide,
    to_dimacs,
    to_edgelist,
)
from .sparsity import (
    DensestWitness,
    FractionalOrientation,
    MadDecision,
    brute_force_mad,
    format_mad_report,
    format_orientation_report,
    fractional_orientation,
    mad_at_most,
    mad_below,
    mad_decide,
    mad_exact,
    subset_density,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ColorableOutcome",
    "ColoringResult",
    "DensestWitness",
    "FractionalOrientation",
    "Graph",
    "GraphParseError",
    "MadDecision",
    "PaletteExhaustedError",
    "PartialColoring",
    "ReductionExhaustedError",
    "ReductionRecord",
    "SolveBudget",
    "UnsupportedDensityError",
    "Violation",
    "brute_force_mad",
    "brute_force_odd_chromatic",
    "choose_color",
    "chromatic_number",
    "classify_small",
    "color_auto",
    "color_cycle",
    "color_cycle_graph",
    "color_eps",
    "color_five",
    "color_forest",
    "color_six",
    "coloring_from_json",
    "coloring_to_json",
    "cycle_chi",
    "degeneracy_order",
    "eps_reduction_records",
    "find_reducible_five",
    "find_reducible_six",
    "five_reduction_records",
    "format_mad_report",
    "format_orientation_report",
    "fractional_orientation",
    "gen_complete",
    "gen_cycle",
    "gen_cycle_with_leaves",
    "gen_kstar",
    "gen_path",
    "gen_star",
    "girth",
    "girth_mad_bound",
    "is_odd_coloring",
    "kstar_coloring",
    "mad_at_most",
    "mad_below",
    "mad_decide",
    "mad_exact",
    "odd_chromatic_number",
    "odd_colorable",
    "parse_dimacs",
    "parse_edgelist",
    "parse_graph",
    "serialize_graph",
    "six_reduction_records",
    "subdivide",
    "subset_density",
    "to_dimacs",
    "to_edgelist",
]
