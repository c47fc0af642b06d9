from ._core import (
    Curve,
    GeometryError,
    Grid,
    IoError,
    Region,
    SolverError,
    SweepRow,
    SzegoSolution,
    ZeroEstimate,
    ZeroMode,
    build_grid,
    cauchy_eval,
    convergence_sweep,
    load_region,
    make_circle,
    make_radial_cosine,
    make_trig_polynomial,
    preset_names,
    preset_region,
    region_from_json,
    region_to_json,
    residual_at,
    solve_boundary,
    solve_second_zero,
    sweep_csv,
    winding_number,
)
from ._core import __version__

__all__ = [
    "Curve",
    "GeometryError",
    "Grid",
    "IoError",
    "Region",
    "SolverError",
    "SweepRow",
    "SzegoSolution",
    "ZeroEstimate",
    "ZeroMode",
    "build_grid",
    "cauchy_eval",
    "convergence_sweep",
    "load_region",
    "make_circle",
    "make_radial_cosine",
    "make_trig_polynomial",
    "preset_names",
    "preset_region",
    "region_from_json",
    "region_to_json",
    "residual_at",
    "solve_boundary",
    "solve_second_zero",
    "sweep_csv",
    "winding_number",
    "__version__",
]
