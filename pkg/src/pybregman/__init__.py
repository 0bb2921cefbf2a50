"""Linearized Bregman and accelerated linearized Bregman solvers."""

from pybregman.__version__ import __version__
from pybregman.diagnostics import (
    NeverStop,
    ResidualStop,
    Trace,
    TraceStatus,
    check_alb_rate,
    check_lb_rate,
    reference_dual_optimum,
)
from pybregman.errors import (
    BregmanError,
    BregmanInputError,
    BregmanNumericalError,
    DimensionMismatchError,
    InnerSolverError,
    InstanceFormatError,
    ReferenceQualityError,
    SolverMismatchError,
    SubgradientError,
)
from pybregman.problems import (
    BasisPursuitProblem,
    MatrixCompletionProblem,
    MatrixKind,
    SignalKind,
    gen_bp,
    gen_mc,
    load_instance,
    save_instance,
)
from pybregman.prox import ObjectiveKind, shrink_matrix, shrink_vec
from pybregman.solvers import (
    ScheduleKind,
    SolverConfig,
    TauRule,
    Variant,
    make_config,
    run,
)

__all__ = [
    "__version__",
    "NeverStop",
    "ResidualStop",
    "Trace",
    "TraceStatus",
    "check_alb_rate",
    "check_lb_rate",
    "reference_dual_optimum",
    "BregmanError",
    "BregmanInputError",
    "BregmanNumericalError",
    "DimensionMismatchError",
    "InnerSolverError",
    "InstanceFormatError",
    "ReferenceQualityError",
    "SolverMismatchError",
    "SubgradientError",
    "BasisPursuitProblem",
    "MatrixCompletionProblem",
    "MatrixKind",
    "SignalKind",
    "gen_bp",
    "gen_mc",
    "load_instance",
    "save_instance",
    "ObjectiveKind",
    "shrink_matrix",
    "shrink_vec",
    "ScheduleKind",
    "SolverConfig",
    "TauRule",
    "Variant",
    "make_config",
    "run",
]
