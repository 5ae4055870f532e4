"""Random 2-CNF to OBDD laboratory (Python bindings)."""

from fractions import Fraction

from . import _core
from ._core import (
    Cnf,
    Error,
    Obdd,
    certified_lower_bound,
    compile,
    count_non_unique,
    estimate_extension_probability,
    estimate_theta_prefix,
    exact_min_size,
    extends_to_sat,
    heuristic_order,
    is_matching_formula,
    is_simple,
    max_degree,
    mmw_linear,
    parse_dimacs,
    pw_exact,
    run_trials,
    sample,
    sample_matching_formula,
    solve_2sat,
    tw_exact,
    tw_upper,
    write_dimacs,
)


def theta(h, f):
    """theta(H, F) as an exact Fraction."""
    num, den = _core.theta(h, f)
    return Fraction(num, den)


__all__ = [
    "Cnf",
    "Error",
    "Obdd",
    "certified_lower_bound",
    "compile",
    "count_non_unique",
    "estimate_extension_probability",
    "estimate_theta_prefix",
    "exact_min_size",
    "extends_to_sat",
    "heuristic_order",
    "is_matching_formula",
    "is_simple",
    "max_degree",
    "mmw_linear",
    "parse_dimacs",
    "pw_exact",
    "run_trials",
    "sample",
    "sample_matching_formula",
    "solve_2sat",
    "theta",
    "tw_exact",
    "tw_upper",
    "write_dimacs",
]
