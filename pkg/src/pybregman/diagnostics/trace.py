"""Per-iteration traces, their CSV form and run summaries."""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel

from pybregman.errors import BregmanInputError
from pybregman.helpers import atomic_write_text

_LOGGER = logging.getLogger(__name__)

CSV_COLUMNS = ("k", "residual_rel", "rel_error", "g_mu", "lagrangian", "wall_ns")
NA = "NA"
RESIDUAL_PLOT_FILE = "residual.dat"
REL_ERROR_PLOT_FILE = "rel_error.dat"


class TraceStatus(str, Enum):

    """Terminal status of a run."""

    CONVERGED = "converged"
    ITER_CAP = "iter-cap"


@dataclass(frozen=True)
class TraceRecord:

    """Quantities recorded after iteration k.

    residual_rel and rel_error belong to x^k, g_mu is G_mu(y^k) and
    lagrangian is L_mu(x^k, y^{k-1}).
    """

    k: int
    residual_rel: float
    rel_error: float | None = None
    g_mu: float | None = None
    lagrangian: float | None = None
    wall_ns: int | None = None


def _format(value: float | int | None) -> str:
    if value is None:
        return NA
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _parse_float(text: str) -> float | None:
    return None if text == NA else float(text)


class TraceSummary(BaseModel):

    """Machine-readable outcome of a run.

    # noqa: E800
    # {"status": "converged", "iterations": 214, "residual_rel": 9.7e-06,
    #  "rel_error": 1.5e-05, "g_mu": null, "variant": "alb",
    #  "config": {...}, "meta": {"seed": 0, ...}, "wall_ns": 81234567}
    """

    status: TraceStatus
    iterations: int
    residual_rel: float | None
    rel_error: float | None
    g_mu: float | None
    variant: str | None
    config: dict[str, Any]
    meta: dict[str, Any]
    wall_ns: int | None

    class Config:
        allow_mutation = False


@dataclass(eq=False)
class Trace:

    """Everything recorded by one solver run."""

    records: list[TraceRecord] = field(default_factory=list)
    status: TraceStatus = TraceStatus.ITER_CAP
    variant: str | None = None
    config: dict[str, Any] = field(default_factory=dict)
    meta: dict[str, Any] = field(default_factory=dict)
    y0: npt.NDArray[np.float64] | None = None
    solution: npt.NDArray[np.float64] | None = None

    def append(self, record: TraceRecord) -> None:
        """Add the record of the next iteration.

        Raises
        ------
            BregmanInputError: the first k is not 1, k does not increase
                or the residual is negative.
        """
        if not self.records and record.k != 1:
            raise BregmanInputError(f"trace rows start at k=1, got k={record.k}")
        if self.records and record.k <= self.records[-1].k:
            raise BregmanInputError(f"trace rows must increase, got k={record.k}")
        if record.residual_rel < 0:
            raise BregmanInputError(f"negative residual {record.residual_rel!r}")
        self.records.append(record)

    @property
    def iterations(self) -> int:
        """Return the number of recorded iterations."""
        return len(self.records)

    @property
    def converged(self) -> bool:
        """Return True when the stop rule fired."""
        return self.status is TraceStatus.CONVERGED

    @property
    def last(self) -> TraceRecord | None:
        """Return the final record, if any."""
        return self.records[-1] if self.records else None

    def column(self, name: str) -> list[Any]:
        """Return one CSV column as a list."""
        if name not in CSV_COLUMNS:
            raise BregmanInputError(f"unknown trace column {name!r}")
        return [getattr(record, name) for record in self.records]

    def to_csv(self) -> str:
        """Return the trace as CSV text with NA for absent fields."""
        lines = [",".join(CSV_COLUMNS)]
        for record in self.records:
            lines.append(",".join(_format(getattr(record, name)) for name in CSV_COLUMNS))
        return "\n".join(lines) + "\n"

    def write_csv(self, path: str | Path) -> Path:
        """Write the CSV atomically."""
        target = atomic_write_text(path, self.to_csv())
        _LOGGER.info("Wrote trace with %d rows to %s", self.iterations, target)
        return target

    @classmethod
    def from_csv(
        cls,
        source: str | Path,
        status: TraceStatus = TraceStatus.ITER_CAP,
    ) -> Trace:
        """Parse a trace CSV file.

        Args:
        ----
            source: path of a CSV written by write_csv
            status: terminal status to attach, usually taken from the summary

        Returns:
        -------
            Trace with the recorded rows.
        """
        reader = csv.DictReader(io.StringIO(Path(source).read_text(encoding="utf-8")))
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise BregmanInputError(f"{source}: unexpected header {reader.fieldnames}")
        trace = cls(status=status)
        for row in reader:
            trace.append(
                TraceRecord(
                    k=int(row["k"]),
                    residual_rel=float(row["residual_rel"]),
                    rel_error=_parse_float(row["rel_error"]),
                    g_mu=_parse_float(row["g_mu"]),
                    lagrangian=_parse_float(row["lagrangian"]),
                    wall_ns=None if row["wall_ns"] == NA else int(row["wall_ns"]),
                )
            )
        return trace

    def summary(self) -> TraceSummary:
        """Return the run summary."""
        last = self.last
        return TraceSummary(
            status=self.status,
            iterations=self.iterations,
            residual_rel=None if last is None else last.residual_rel,
            rel_error=None if last is None else last.rel_error,
            g_mu=None if last is None else last.g_mu,
            variant=self.variant,
            config=self.config,
            meta=self.meta,
            wall_ns=None if last is None else last.wall_ns,
        )

    def write_summary(self, path: str | Path) -> Path:
        """Write the summary JSON atomically."""
        text = self.summary().json(sort_keys=True, indent=2) + "\n"
        return atomic_write_text(path, text)


def write_plot_data(trace: Trace, out_dir: str | Path) -> list[Path]:
    """Write two-column plot data: k vs residual and k vs relative error.

    The error file is only written when the trace carries errors.
    """
    directory = Path(out_dir)
    written = [
        atomic_write_text(
            directory / RESIDUAL_PLOT_FILE,
            "".join(f"{r.k} {r.residual_rel!r}\n" for r in trace.records),
        )
    ]
    errors = [r for r in trace.records if r.rel_error is not None]
    if errors:
        written.append(
            atomic_write_text(
                directory / REL_ERROR_PLOT_FILE,
                "".join(f"{r.k} {r.rel_error!r}\n" for r in errors),
            )
        )
    return written
