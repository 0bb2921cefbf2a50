"""Experiment, verification and repro-grid models."""
from __future__ import annotations

from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field

from pybregman.problems import MatrixKind, SignalKind
from pybregman.prox import ObjectiveKind
from pybregman.solvers import McShrinkArg, TauRule, Variant

Command = Literal["gen", "bp", "mc", "verify", "repro-table1", "repro-table2"]
Suite = Literal["equivalence", "rates", "prox", "gradient", "constrained", "all"]


class ExperimentConfig(BaseModel):

    """Everything one command-line invocation needs.

    Loaded from --config JSON; command-line flags override file values.

    # noqa: E800
    # {"command": "bp", "matrix": "gaussian", "signal": "uniform", "n": 2000,
    #  "seed": 0, "variant": "alb", "tau_rule": "paper-cs", "out": "runs/bp"}
    """

    command: Command | None = None
    problem: Literal["bp", "mc"] | None = None
    matrix: MatrixKind = MatrixKind.GAUSSIAN
    signal: SignalKind = SignalKind.GAUSSIAN
    n: int | None = Field(None, gt=0)
    m: int | None = Field(None, gt=0)
    s: int | None = Field(None, gt=0)
    rank: int = Field(10, gt=0)
    fr: float = Field(0.2, gt=0, lt=1)
    seed: int = Field(0, ge=0)
    instance: Path | None = None
    variant: Variant = Variant.ALB
    mu: float | None = Field(None, gt=0)
    tau: float | None = Field(None, gt=0)
    tau_rule: TauRule | None = None
    schedule: str = "tseng"
    tol: float | None = Field(None, gt=0, lt=1)
    max_iters: int | None = Field(None, ge=1)
    objective: ObjectiveKind | None = None
    mc_shrink_arg: McShrinkArg = McShrinkArg.TILDE
    record_time: bool = True
    out: Path = Path("out")
    suite: Suite = "all"
    scale: float = Field(1.0, gt=0, le=1)
    max_n: int | None = Field(None, gt=0)

    class Config:
        allow_mutation = False
        extra = "forbid"

    def merged(self, overrides: dict[str, Any]) -> ExperimentConfig:
        """Return a validated copy with every non-None override applied."""
        data = self.dict()
        data.update({key: value for key, value in overrides.items() if value is not None})
        return ExperimentConfig.parse_obj(data)


class PropertyResult(BaseModel):

    """One checked property with its measured value."""

    suite: str
    name: str
    passed: bool
    measured: float
    threshold: float
    detail: str = ""


class VerifyReport(BaseModel):

    """Pass/fail results of the verify suites."""

    suites: list[str]
    results: list[PropertyResult]

    @property
    def passed(self) -> bool:
        """Return True when every property passed."""
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> list[PropertyResult]:
        """Return the failed properties."""
        return [result for result in self.results if not result.passed]


class CellSpec(BaseModel):

    """One solver run of a repro grid."""

    table: Literal[1, 2]
    row: int = Field(..., ge=0)
    variant: Variant
    seed: int
    out_dir: Path
    matrix: MatrixKind | None = None
    signal: SignalKind | None = None
    n: int
    fr: float | None = None
    rank: int | None = None
    max_iters: int

    @property
    def name(self) -> str:
        """Return a file-system friendly cell name."""
        if self.matrix is not None and self.signal is not None:
            return f"t1-{self.matrix.value}-{self.signal.value}-n{self.n}-{self.variant.value}"
        return f"t2-n{self.n}-fr{self.fr}-{self.variant.value}"


class CellResult(BaseModel):

    """Outcome of one repro cell, failed cells included."""

    name: str
    table: int
    row: int
    variant: str
    n: int
    iterations: int | None = None
    converged: bool = False
    rel_error: float | None = None
    residual_rel: float | None = None
    wall_ns: int | None = None
    error: str | None = None
