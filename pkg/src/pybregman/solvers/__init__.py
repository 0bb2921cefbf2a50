"""Linearized Bregman solvers, their accelerated forms and the run driver."""
from pybregman.solvers.base import IterativeSolver
from pybregman.solvers.basis_pursuit import (
    AlbDualSolver,
    AlbPrimalSolver,
    AlbVSolver,
    LbDualSolver,
    LbPrimalSolver,
    LbVSolver,
    accel_dual_step,
    alb_step_primal,
    alb_step_vform,
    dual_consistency_gap,
    dual_gd_step,
    initial_accel_dual_state,
    initial_alb_state,
    initial_alb_vstate,
    initial_dual_state,
    initial_lb_primal_state,
    initial_vstate,
    lb_step_primal,
    lb_step_vform,
)
from pybregman.solvers.bregman import (
    AugLagSolver,
    BregmanSolver,
    auglag_step,
    bregman_exact_step,
    initial_auglag_state,
    initial_bregman_state,
    solve_l1_least_squares,
)
from pybregman.solvers.completion import (
    McAlbSolver,
    McDualSolver,
    McLbSolver,
    initial_mc_dual_state,
    initial_mc_state,
    mc_alb_step,
    mc_dual_step,
    mc_lb_step,
)
from pybregman.solvers.models import (
    AccelDualState,
    AlbState,
    AlbVState,
    AugLagState,
    DualState,
    LbPrimalState,
    McDualState,
    McShrinkArg,
    McState,
    ScheduleKind,
    SolverConfig,
    Variant,
    VState,
)
from pybregman.solvers.runner import make_config, make_solver, primal_sequence, run
from pybregman.solvers.schedule import TauRule, alpha, default_tau, theta

__all__ = [
    "IterativeSolver",
    "AlbDualSolver",
    "AlbPrimalSolver",
    "AlbVSolver",
    "LbDualSolver",
    "LbPrimalSolver",
    "LbVSolver",
    "accel_dual_step",
    "alb_step_primal",
    "alb_step_vform",
    "dual_gd_step",
    "initial_accel_dual_state",
    "initial_alb_state",
    "initial_alb_vstate",
    "initial_dual_state",
    "initial_lb_primal_state",
    "initial_vstate",
    "lb_step_primal",
    "lb_step_vform",
    "dual_consistency_gap",
    "AugLagSolver",
    "BregmanSolver",
    "auglag_step",
    "bregman_exact_step",
    "initial_auglag_state",
    "initial_bregman_state",
    "solve_l1_least_squares",
    "McAlbSolver",
    "McDualSolver",
    "McLbSolver",
    "initial_mc_dual_state",
    "initial_mc_state",
    "mc_alb_step",
    "mc_dual_step",
    "mc_lb_step",
    "AccelDualState",
    "AlbState",
    "AlbVState",
    "AugLagState",
    "DualState",
    "LbPrimalState",
    "McDualState",
    "McShrinkArg",
    "McState",
    "ScheduleKind",
    "SolverConfig",
    "Variant",
    "VState",
    "TauRule",
    "alpha",
    "default_tau",
    "theta",
    "make_config",
    "make_solver",
    "primal_sequence",
    "run",
]
