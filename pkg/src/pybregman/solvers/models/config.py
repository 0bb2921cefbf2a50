"""Solver configuration models."""
from __future__ import annotations

from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, Field, root_validator

from pybregman.errors import BregmanInputError
from pybregman.prox import ObjectiveKind

from ..const import DEFAULT_INNER_MAX_ITERS, DEFAULT_INNER_TOL
from ..schedule import TauRule
from ..schedule import alpha as tseng_alpha


class Variant(str, Enum):

    """Solver variant selectable from the command line.

    lb and alb are the v-forms for basis pursuit.
    """

    LB = "lb"
    ALB = "alb"
    LB_PRIMAL = "lb-primal"
    LB_DUAL = "lb-dual"
    ALB_PRIMAL = "alb-primal"
    ALB_DUAL = "alb-dual"
    BREGMAN = "bregman"
    AUGLAG = "auglag"

    @property
    def accelerated(self) -> bool:
        """Return True for the variants that extrapolate."""
        return self in (Variant.ALB, Variant.ALB_PRIMAL, Variant.ALB_DUAL)


class McShrinkArg(str, Enum):

    """Which iterates enter the shrink argument of the accelerated completion step."""

    TILDE = "tilde"
    AS_PRINTED = "as-printed"


class ScheduleKind(BaseModel):

    """Extrapolation weights alpha_k of the accelerated methods.

    # noqa: E800
    # {"tag": "tseng", "alpha": null}
    # {"tag": "constant", "alpha": 1.0}
    """

    tag: Literal["tseng", "constant"] = "tseng"
    alpha: float | None = None

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def check_alpha(cls, values: dict[str, Any]) -> dict[str, Any]:  # noqa: N805
        """Constant needs alpha in (0, 2]; tseng takes no parameter."""
        tag, value = values["tag"], values.get("alpha")
        if tag == "constant":
            if value is None or not 0.0 < value <= 2.0:
                raise ValueError(f"constant schedule needs alpha in (0, 2], got {value}")
        elif value is not None:
            raise ValueError("the tseng schedule takes no parameter")
        return values

    @classmethod
    def parse_spec(cls, text: str) -> ScheduleKind:
        """Parse "tseng" or "constant:<alpha>".

        Raises
        ------
            BregmanInputError: unknown or malformed schedule.
        """
        name, _, argument = text.strip().partition(":")
        try:
            if name == "tseng" and not argument:
                return cls()
            if name == "constant":
                return cls(tag="constant", alpha=float(argument))
        except ValueError as exception:
            raise BregmanInputError(f"invalid schedule {text!r}") from exception
        raise BregmanInputError(f"invalid schedule {text!r}, expected tseng or constant:<a>")

    def alpha_at(self, k: int) -> float:
        """Return alpha_k."""
        if self.tag == "constant":
            return float(self.alpha)  # type: ignore[arg-type]
        return tseng_alpha(k)

    def __str__(self) -> str:
        """Represent the schedule in its command-line form."""
        if self.tag == "constant":
            return f"constant:{self.alpha!r}"
        return "tseng"


class SolverConfig(BaseModel):

    """Parameters shared by every solver variant.

    # noqa: E800
    # {"mu": 5.0, "tau": 0.0049, "max_iters": 5000, "residual_tol": 1e-05,
    #  "schedule": {"tag": "tseng", "alpha": null}, "objective": "l1",
    #  "tau_rule": "paper-cs", "mc_shrink_arg": "tilde",
    #  "inner_tol": 1e-10, "inner_max_iters": 1000000, "record_dual": true}
    """

    mu: float = Field(..., gt=0)
    tau: float = Field(..., gt=0)
    max_iters: int = Field(..., ge=1)
    residual_tol: float = Field(..., gt=0, lt=1)
    schedule: ScheduleKind = Field(default_factory=ScheduleKind)
    objective: ObjectiveKind = ObjectiveKind.L1
    tau_rule: TauRule | None = None
    mc_shrink_arg: McShrinkArg = McShrinkArg.TILDE
    inner_tol: float = Field(DEFAULT_INNER_TOL, gt=0)
    inner_max_iters: int = Field(DEFAULT_INNER_MAX_ITERS, ge=1)
    record_dual: bool = True

    class Config:
        allow_mutation = False

    def snapshot(self) -> dict[str, Any]:
        """Return a JSON-compatible copy of the configuration."""
        data = self.dict()
        data["schedule"] = str(self.schedule)
        data["objective"] = self.objective.value
        data["tau_rule"] = None if self.tau_rule is None else self.tau_rule.value
        data["mc_shrink_arg"] = self.mc_shrink_arg.value
        return data
