"""Gauged fractal dimension toolkit.

Covering/packing numbers, gauged Minkowski dimension estimates, the
Hausdorff-metric hyperspace bounds and an LZ78 complexity proxy, backed by
the C++ core.
"""

from ._core import (  # noqa: F401
    CapacityError,
    NoBracketError,
    PreconditionError,
    __version__,
    cantor7_intervals,
    covering_number,
    e0_intervals,
    gauge_log2_eval,
    hausdorff_distance,
    hyperspace_bounds,
    jump_characterization,
    loglog_slope,
    lz78_code_length,
    minkowski_estimate,
    one_over_n,
    packing_number,
    point_complexity,
    proxy_dimension,
    verify_hyperspace_unit_interval,
)

__all__ = [
    "CapacityError",
    "NoBracketError",
    "PreconditionError",
    "cantor7_intervals",
    "covering_number",
    "e0_intervals",
    "gauge_log2_eval",
    "hausdorff_distance",
    "hyperspace_bounds",
    "jump_characterization",
    "loglog_slope",
    "lz78_code_length",
    "minkowski_estimate",
    "one_over_n",
    "packing_number",
    "point_complexity",
    "proxy_dimension",
    "verify_hyperspace_unit_interval",
]
