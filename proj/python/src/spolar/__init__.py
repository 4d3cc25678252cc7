"""Universal polarization bounds for spherical codes and designs."""

from spolar._core import (
    NumericError,
    Potential,
    PreconditionError,
    SphericalCode,
    builtin_code,
    cell600_bound,
    dgs_bound,
    fl_bound,
    load_code_csv,
    maximize,
    minimize,
    moments,
    named_s_star,
    one_design_optimum,
    parse_potential,
    potential_at,
    pulb,
    pulb_negative,
    puub,
    s_of_code,
)

__all__ = [
    "NumericError",
    "Potential",
    "PreconditionError",
    "SphericalCode",
    "builtin_code",
    "cell600_bound",
    "dgs_bound",
    "fl_bound",
    "load_code_csv",
    "maximize",
    "minimize",
    "moments",
    "named_s_star",
    "one_design_optimum",
    "parse_potential",
    "potential_at",
    "pulb",
    "pulb_negative",
    "puub",
    "s_of_code",
]

__version__ = "0.1.0"
