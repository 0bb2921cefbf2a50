"""Problem instances, generators, evaluators and instance files."""
from pybregman.problems.evaluators import (
    LagrangianPoint,
    dual_gradient,
    dual_minimizer,
    dual_objective,
    lagrangian,
    lagrangian_point,
    lipschitz_bound,
    relative_gradient_error,
)
from pybregman.problems.generators import default_bp_dims, gen_bp, gen_mc, mc_sample_count
from pybregman.problems.io import (
    InstanceHeader,
    Problem,
    instance_digest,
    load_instance,
    meta_dict,
    read_header,
    save_instance,
    serialize_instance,
)
from pybregman.problems.models import (
    BasisPursuitProblem,
    BpMeta,
    MatrixCompletionProblem,
    MatrixKind,
    McMeta,
    SignalKind,
)

__all__ = [
    "LagrangianPoint",
    "dual_gradient",
    "dual_minimizer",
    "dual_objective",
    "lagrangian",
    "lagrangian_point",
    "lipschitz_bound",
    "relative_gradient_error",
    "gen_bp",
    "gen_mc",
    "mc_sample_count",
    "default_bp_dims",
    "InstanceHeader",
    "Problem",
    "instance_digest",
    "meta_dict",
    "load_instance",
    "read_header",
    "save_instance",
    "serialize_instance",
    "BasisPursuitProblem",
    "BpMeta",
    "MatrixCompletionProblem",
    "MatrixKind",
    "McMeta",
    "SignalKind",
]
