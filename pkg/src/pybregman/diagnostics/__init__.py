"""Metrics, stop rules, traces and rate checks."""
from pybregman.diagnostics.deviation import (
    GRID_STEP,
    max_sequence_deviation,
    nonneg_grid_oracle,
    relative_deviation,
    shrink_grid_oracle,
)
from pybregman.diagnostics.metrics import (
    ground_truth,
    rel_error,
    residual_rel_bp,
    residual_rel_mc,
    stopping_residual,
)
from pybregman.diagnostics.rates import (
    RateReport,
    ReferenceOptimum,
    alb_bound,
    check_alb_rate,
    check_lb_rate,
    lb_bound,
    rate_envelopes,
    reference_dual_optimum,
)
from pybregman.diagnostics.stop import NeverStop, ResidualStop, StopRule
from pybregman.diagnostics.trace import (
    CSV_COLUMNS,
    Trace,
    TraceRecord,
    TraceStatus,
    TraceSummary,
    write_plot_data,
)

__all__ = [
    "GRID_STEP",
    "max_sequence_deviation",
    "nonneg_grid_oracle",
    "relative_deviation",
    "shrink_grid_oracle",
    "ground_truth",
    "rel_error",
    "residual_rel_bp",
    "residual_rel_mc",
    "stopping_residual",
    "RateReport",
    "ReferenceOptimum",
    "alb_bound",
    "check_alb_rate",
    "check_lb_rate",
    "lb_bound",
    "rate_envelopes",
    "reference_dual_optimum",
    "NeverStop",
    "ResidualStop",
    "StopRule",
    "CSV_COLUMNS",
    "Trace",
    "TraceRecord",
    "TraceStatus",
    "TraceSummary",
    "write_plot_data",
]
