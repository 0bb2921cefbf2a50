"""Verification suites: iterate identities, rate bounds, prox and gradient oracles."""
from __future__ import annotations

import logging
from collections.abc import Callable, Iterable

import numpy as np

from pybregman.diagnostics import (
    GRID_STEP,
    NeverStop,
    ResidualStop,
    check_alb_rate,
    check_lb_rate,
    max_sequence_deviation,
    nonneg_grid_oracle,
    reference_dual_optimum,
    residual_rel_bp,
    shrink_grid_oracle,
)
from pybregman.linalg import RngStream
from pybregman.problems import (
    BasisPursuitProblem,
    MatrixKind,
    SignalKind,
    default_bp_dims,
    dual_gradient,
    dual_objective,
    gen_bp,
    lipschitz_bound,
    relative_gradient_error,
)
from pybregman.prox import ObjectiveKind, prox_l1_nonneg, shrink_matrix, shrink_vec
from pybregman.solvers import (
    ScheduleKind,
    SolverConfig,
    TauRule,
    Variant,
    dual_consistency_gap,
    dual_gd_step,
    initial_dual_state,
    initial_lb_primal_state,
    lb_step_primal,
    make_config,
    make_solver,
    primal_sequence,
    run,
)

from . import const
from .models import PropertyResult, Suite, VerifyReport

_LOGGER = logging.getLogger(__name__)

GRADIENT_MU = 5.0
MATRIX_KINDS = tuple(MatrixKind)
LB_FORMS = (Variant.LB_PRIMAL, Variant.LB_DUAL, Variant.LB)
ALB_FORMS = (Variant.ALB_PRIMAL, Variant.ALB_DUAL, Variant.ALB)


def _result(
    suite: str,
    name: str,
    measured: float,
    threshold: float,
    detail: str = "",
) -> PropertyResult:
    passed = bool(np.isfinite(measured) and measured <= threshold)
    if not passed:
        _LOGGER.warning("%s/%s failed: %.3e > %.3e %s", suite, name, measured, threshold, detail)
    return PropertyResult(
        suite=suite,
        name=name,
        passed=passed,
        measured=measured,
        threshold=threshold,
        detail=detail,
    )


def _equivalence_instances(count: int) -> Iterable[tuple[str, BasisPursuitProblem]]:
    for index in range(count):
        n, m, s = default_bp_dims(const.EQUIVALENCE_DIMS[index % len(const.EQUIVALENCE_DIMS)])
        kind = MATRIX_KINDS[index % len(MATRIX_KINDS)]
        problem = gen_bp(kind, SignalKind.GAUSSIAN, n, m, s, seed=index)
        yield f"{kind.value}-n{n}-seed{index}", problem


def suite_equivalence(
    instances: int = const.EQUIVALENCE_INSTANCES,
    iterations: int = const.EQUIVALENCE_ITERS,
) -> list[PropertyResult]:
    """Check that the three LB forms and the three ALB forms produce the same iterates.

    Also checks the primal/dual consistency along LB and that a constant
    schedule alpha = 1 turns ALB into LB.
    """
    results = []
    for label, problem in _equivalence_instances(instances):
        config = make_config(problem, tau_rule=TauRule.THEORY_SAFE, max_iters=iterations)
        sequences = {
            variant: primal_sequence(problem, config, variant, iterations)
            for variant in LB_FORMS + ALB_FORMS
        }
        for family, (primal, dual, vform) in (("lb", LB_FORMS), ("alb", ALB_FORMS)):
            deviation = max(
                max_sequence_deviation(sequences[primal], sequences[dual]),
                max_sequence_deviation(sequences[primal], sequences[vform]),
            )
            results.append(
                _result(
                    "equivalence", f"{family}-forms[{label}]", deviation, const.EQUIVALENCE_RTOL
                )
            )

        primal_state = initial_lb_primal_state(problem)
        dual_state = initial_dual_state(problem, config)
        worst_gap = 0.0
        for _ in range(iterations):
            gap = dual_consistency_gap(primal_state, dual_state, problem, config)
            worst_gap = max(worst_gap, gap)
            primal_state = lb_step_primal(primal_state, problem, config)
            dual_state, _ = dual_gd_step(dual_state, problem, config)
        results.append(
            _result("equivalence", f"dual-consistency[{label}]", worst_gap, const.EQUIVALENCE_RTOL)
        )

        constant = config.copy(update={"schedule": ScheduleKind(tag="constant", alpha=1.0)})
        reduced = primal_sequence(problem, constant, Variant.ALB_PRIMAL, iterations)
        results.append(
            _result(
                "equivalence",
                f"constant-schedule[{label}]",
                max_sequence_deviation(reduced, sequences[Variant.LB_PRIMAL]),
                const.SCHEDULE_REDUCTION_RTOL,
            )
        )
    return results


def suite_rates(iterations: int = const.RATE_ITERS) -> list[PropertyResult]:
    """Check both dual gap bounds, monotonicity of G along LB and G(y^k) = -L(x^{k+1}, y^k)."""
    n, m, s = const.RATE_DIMS
    problem = gen_bp(MatrixKind.GAUSSIAN, SignalKind.GAUSSIAN, n, m, s, seed=0)
    config = make_config(problem, tau_rule=TauRule.THEORY_SAFE, max_iters=iterations)
    reference = reference_dual_optimum(problem, config)
    detail = "reference flagged" if reference.flagged else ""

    lb_trace = run(problem, config, Variant.LB_DUAL, NeverStop())
    alb_trace = run(problem, config, Variant.ALB_DUAL, NeverStop())
    lb_report = check_lb_rate(lb_trace, reference, config.tau)
    alb_report = check_alb_rate(alb_trace, reference, config.tau)

    g_values = lb_trace.column("g_mu")
    lagrangians = lb_trace.column("lagrangian")
    identity = max(
        (
            abs(g + value) / max(1.0, abs(g))
            for g, value in zip(g_values[:-1], lagrangians[1:], strict=True)
        ),
        default=0.0,
    )
    return [
        _result("rates", "lb-bound", lb_report.max_ratio, 1.0 + lb_report.slack, detail),
        _result("rates", "alb-bound", alb_report.max_ratio, 1.0 + alb_report.slack, detail),
        _result("rates", "lb-monotone", float(len(lb_report.monotone_violations)), 0.0),
        _result("rates", "dual-identity", identity, const.DUAL_IDENTITY_TOL),
    ]


def suite_prox(seed: int = 0) -> list[PropertyResult]:
    """Compare the shrink operators with brute-force grid minimization."""
    rng = RngStream(seed)

    shrink_error = 0.0
    nonneg_error = 0.0
    for _ in range(const.PROX_SAMPLES):
        z, alpha = 3.0 * rng.uniform_pm1(1)[0], 0.1 + rng.uniform_positive(1)[0]
        closed = float(shrink_vec(np.array([z]), alpha)[0])
        shrink_error = max(shrink_error, abs(shrink_grid_oracle(z, alpha) - closed))

        v, mu = 3.0 * rng.uniform_pm1(1)[0], 0.5 + 4.0 * rng.uniform_positive(1)[0]
        closed = float(prox_l1_nonneg(np.array([v]), mu)[0])
        nonneg_error = max(nonneg_error, abs(nonneg_grid_oracle(v, mu) - closed))

    diagonal = 2.0 * rng.uniform_pm1(6)
    shrunk = shrink_matrix(np.diag(diagonal), 0.7)
    matrix_error = float(np.max(np.abs(shrunk - np.diag(shrink_vec(diagonal, 0.7)))))

    expansion = 0.0
    for _ in range(const.NONEXPANSIVE_PAIRS):
        u, w = rng.gaussian(8), rng.gaussian(8)
        distance = float(np.linalg.norm(u - w))
        if distance > 0:
            moved = float(np.linalg.norm(shrink_vec(u, 0.5) - shrink_vec(w, 0.5)))
            expansion = max(expansion, moved / distance)

    return [
        _result("prox", "shrink-grid", shrink_error, GRID_STEP),
        _result("prox", "nonneg-grid", nonneg_error, GRID_STEP),
        _result("prox", "shrink-matrix-diagonal", matrix_error, 1e-12),
        _result("prox", "nonexpansive", expansion, 1.0 + 1e-12),
    ]


def suite_gradient(
    instances: int = const.GRADIENT_INSTANCES,
    points: int = const.GRADIENT_POINTS,
) -> list[PropertyResult]:
    """Check grad G against finite differences, the Lipschitz bound and convexity of G."""
    results = []
    mu = GRADIENT_MU
    for index in range(instances):
        kind = MATRIX_KINDS[index % len(MATRIX_KINDS)]
        problem = gen_bp(kind, SignalKind.GAUSSIAN, 50, 20, 4, seed=index)
        m = problem.shape[0]
        rng = RngStream(1000 + index)
        worst = max(
            relative_gradient_error(rng.gaussian(m) / mu, problem, mu) for _ in range(points)
        )
        results.append(
            _result("gradient", f"finite-differences[seed{index}]", worst, const.GRADIENT_RTOL)
        )

        bound = lipschitz_bound(problem, mu)
        ratio = 0.0
        chord = 0.0
        for _ in range(const.LIPSCHITZ_PAIRS // instances):
            y1, y2 = rng.gaussian(m), rng.gaussian(m)
            difference = dual_gradient(y1, problem, mu) - dual_gradient(y2, problem, mu)
            quotient = float(np.linalg.norm(difference)) / float(np.linalg.norm(y1 - y2))
            ratio = max(ratio, quotient / bound)
            g1, _ = dual_objective(y1, problem, mu)
            g2, _ = dual_objective(y2, problem, mu)
            g_mid, _ = dual_objective(0.5 * (y1 + y2), problem, mu)
            chord = max(chord, g_mid - 0.5 * (g1 + g2))
        results.append(_result("gradient", f"lipschitz[seed{index}]", ratio, 1.0 + 1e-9))
        results.append(_result("gradient", f"convexity[seed{index}]", chord, const.CONVEXITY_TOL))
    return results


def suite_constrained(seed: int = 0) -> list[PropertyResult]:
    """Run nonnegative basis pursuit with LB and ALB on a nonnegative signal."""
    n, m, s = default_bp_dims(const.CONSTRAINED_N)
    problem = gen_bp(MatrixKind.GAUSSIAN, SignalKind.NONNEG_UNIFORM, n, m, s, seed=seed)
    config = make_config(problem, objective=ObjectiveKind.L1_NONNEG)
    stop = ResidualStop(config.residual_tol)

    outcome: dict[Variant, tuple[int, float, float]] = {}
    for variant in (Variant.LB, Variant.ALB):
        solver = make_solver(problem, config, variant)
        iterations, residual, negative = 0, float("inf"), 0.0
        for _, current, iterate in solver.iterate(config.max_iters):
            iterations = current.k
            residual = residual_rel_bp(iterate, problem)
            negative = max(negative, float(-np.min(iterate)))
            if stop.should_stop(residual):
                break
        outcome[variant] = (iterations, residual, negative)

    lb_iterations, _, lb_negative = outcome[Variant.LB]
    alb_iterations, alb_residual, alb_negative = outcome[Variant.ALB]
    return [
        _result("constrained", "alb-residual", alb_residual, config.residual_tol),
        _result("constrained", "nonnegative-iterates", max(alb_negative, lb_negative), 0.0),
        _result(
            "constrained",
            "alb-faster",
            float(alb_iterations),
            float(lb_iterations - 1),
            f"alb={alb_iterations} lb={lb_iterations}",
        ),
    ]


SUITES: dict[str, Callable[[], list[PropertyResult]]] = {
    "equivalence": suite_equivalence,
    "rates": suite_rates,
    "prox": suite_prox,
    "gradient": suite_gradient,
    "constrained": suite_constrained,
}


def run_suites(suite: Suite) -> VerifyReport:
    """Run one suite, or every suite for "all"."""
    names = list(SUITES) if suite == "all" else [suite]
    results: list[PropertyResult] = []
    for name in names:
        _LOGGER.info("Running verify suite %s", name)
        results.extend(SUITES[name]())
    return VerifyReport(suites=names, results=results)
