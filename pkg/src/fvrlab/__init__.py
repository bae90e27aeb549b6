"""Exact arithmetic and bound experiments over finite valuation rings."""

from .checks import (
    check_cube_sum,
    check_expander,
    check_f_of_A_plus_A,
    check_plunnecke_corollary,
    check_power_energy,
    check_prod_diff,
    check_sum_square,
)
from .experiments import ExperimentConfig, Mode, load_config, parse_mode, run_experiment
from .geometry import (
    count_collinear_triples,
    count_lines,
    geometry_bound_report,
    grid_lines,
    is_collinear,
    line_count_report,
    line_through,
)
from .incidence import (
    WeightedFamily,
    count_incidences,
    count_weighted_incidences,
    incidence_bound_report,
    load_family,
    weighted_bound_report,
)
from .report import BoundRow, CheckReport, read_jsonl, write_csv, write_jsonl
from .ring import Coset, Ring, make_ring, parse_ring_spec
from .setalg import (
    POWER_SUM,
    PRODUCT,
    SUM,
    QuadPolySpec,
    RSet,
    diffset,
    dilate,
    energy,
    image_quad3,
    image_shifted_quad,
    parse_quadpoly,
    parse_set_literal,
    power_set,
    prodset,
    rep_histogram,
    sumset,
    translate,
)

__all__ = [
    "Coset",
    "Ring",
    "make_ring",
    "parse_ring_spec",
    "RSet",
    "QuadPolySpec",
    "parse_set_literal",
    "parse_quadpoly",
    "sumset",
    "diffset",
    "prodset",
    "translate",
    "dilate",
    "power_set",
    "rep_histogram",
    "energy",
    "image_quad3",
    "image_shifted_quad",
    "SUM",
    "PRODUCT",
    "POWER_SUM",
    "BoundRow",
    "CheckReport",
    "read_jsonl",
    "write_jsonl",
    "write_csv",
    "WeightedFamily",
    "load_family",
    "count_incidences",
    "count_weighted_incidences",
    "incidence_bound_report",
    "weighted_bound_report",
    "is_collinear",
    "line_through",
    "grid_lines",
    "count_collinear_triples",
    "count_lines",
    "geometry_bound_report",
    "line_count_report",
    "check_expander",
    "check_sum_square",
    "check_cube_sum",
    "check_f_of_A_plus_A",
    "check_prod_diff",
    "check_power_energy",
    "check_plunnecke_corollary",
    "ExperimentConfig",
    "Mode",
    "parse_mode",
    "load_config",
    "run_experiment",
]

__version__ = "0.1.0"
