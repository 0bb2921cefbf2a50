"""Instance serialization: a JSON header line followed by little-endian payloads."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ValidationError

from pybregman.errors import InstanceFormatError
from pybregman.helpers import atomic_write_bytes

from .models import BasisPursuitProblem, BpMeta, MatrixCompletionProblem, McMeta

_LOGGER = logging.getLogger(__name__)

FORMAT_TAG = "pybregman-instance"
FORMAT_VERSION = 1
FLOAT_DTYPE = "<f8"
INDEX_DTYPE = "<i8"


class ArraySpec(BaseModel):

    """Location of one array in the payload section."""

    name: str
    dtype: Literal["<f8", "<i8"]
    shape: list[int]
    offset: int
    nbytes: int


class InstanceHeader(BaseModel):

    """Self-describing header of an instance file."""

    format: Literal["pybregman-instance"] = FORMAT_TAG
    version: int = FORMAT_VERSION
    kind: Literal["bp", "mc"]
    meta: dict[str, Any]
    mu: float | None = None
    arrays: list[ArraySpec]


Problem = BasisPursuitProblem | MatrixCompletionProblem


def _payloads(problem: Problem) -> list[tuple[str, npt.NDArray[Any], str]]:
    if isinstance(problem, BasisPursuitProblem):
        arrays = [("a", problem.a, FLOAT_DTYPE), ("b", problem.b, FLOAT_DTYPE)]
        if problem.x_true is not None:
            arrays.append(("x_true", problem.x_true, FLOAT_DTYPE))
        return arrays
    arrays = [
        ("omega", problem.omega, INDEX_DTYPE),
        ("observed", problem.observed, FLOAT_DTYPE),
    ]
    if problem.m_true is not None:
        arrays.append(("m_true", problem.m_true, FLOAT_DTYPE))
    return arrays


def meta_dict(problem: Problem) -> dict[str, Any]:
    """Return the generation metadata as a JSON-compatible dict."""
    if problem.meta is not None:
        return json.loads(problem.meta.json())
    if isinstance(problem, MatrixCompletionProblem):
        return {"n": problem.n, "r": problem.r}
    return {}


def serialize_instance(problem: Problem, mu: float | None = None) -> bytes:
    """Return the on-disk bytes of an instance.

    Args:
    ----
        problem: BasisPursuitProblem or MatrixCompletionProblem
        mu: optional regularization parameter to record

    Returns:
    -------
        bytes
    """
    specs: list[ArraySpec] = []
    chunks: list[bytes] = []
    offset = 0
    for name, array, dtype in _payloads(problem):
        raw = np.ascontiguousarray(array, dtype=dtype).tobytes(order="C")
        specs.append(
            ArraySpec(
                name=name,
                dtype=dtype,
                shape=list(array.shape),
                offset=offset,
                nbytes=len(raw),
            )
        )
        chunks.append(raw)
        offset += len(raw)

    header = InstanceHeader(
        kind="bp" if isinstance(problem, BasisPursuitProblem) else "mc",
        meta=meta_dict(problem),
        mu=mu,
        arrays=specs,
    )
    line = header.json(sort_keys=True, separators=(",", ":")).encode("utf-8") + b"\n"
    return line + b"".join(chunks)


def save_instance(problem: Problem, path: str | Path, mu: float | None = None) -> Path:
    """Write an instance file atomically.

    Args:
    ----
        problem: BasisPursuitProblem or MatrixCompletionProblem
        path: destination
        mu: optional regularization parameter to record

    Returns:
    -------
        The written path.
    """
    target = atomic_write_bytes(path, serialize_instance(problem, mu))
    _LOGGER.info("Saved instance %s to %s", problem, target)
    return target


def read_header(path: str | Path) -> InstanceHeader:
    """Read only the header of an instance file."""
    header, _ = _split(Path(path).read_bytes(), path)
    return header


def _split(data: bytes, source: str | Path) -> tuple[InstanceHeader, bytes]:
    newline = data.find(b"\n")
    if newline < 0:
        raise InstanceFormatError(f"{source}: missing header line")
    try:
        header = InstanceHeader.parse_raw(data[:newline])
    except (ValidationError, ValueError) as exception:
        raise InstanceFormatError(f"{source}: invalid header") from exception
    return header, data[newline + 1 :]


def load_instance(path: str | Path) -> tuple[Problem, float | None]:
    """Read an instance file.

    Args:
    ----
        path: instance file

    Returns:
    -------
        (problem, recorded mu or None)

    Raises:
    ------
        InstanceFormatError: the file is truncated, corrupt or of another format.
    """
    try:
        data = Path(path).read_bytes()
    except OSError as exception:
        raise InstanceFormatError(f"cannot read instance {path}") from exception
    header, payload = _split(data, path)

    arrays: dict[str, npt.NDArray[Any]] = {}
    for spec in header.arrays:
        end = spec.offset + spec.nbytes
        if end > len(payload):
            raise InstanceFormatError(f"{path}: array {spec.name} is truncated")
        native = np.int64 if spec.dtype == INDEX_DTYPE else np.float64
        try:
            raw = np.frombuffer(payload[spec.offset : end], dtype=spec.dtype)
            arrays[spec.name] = raw.reshape(spec.shape).astype(native)
        except ValueError as exception:
            raise InstanceFormatError(
                f"{path}: array {spec.name} does not fit shape {spec.shape}"
            ) from exception

    try:
        if header.kind == "bp":
            problem: Problem = BasisPursuitProblem(
                a=arrays["a"],
                b=arrays["b"],
                x_true=arrays.get("x_true"),
                meta=BpMeta.parse_obj(header.meta) if header.meta else None,
            )
        else:
            meta = McMeta.parse_obj(header.meta) if "p" in header.meta else None
            m_true = arrays.get("m_true")
            n = int(header.meta["n"])
            problem = MatrixCompletionProblem(
                n=n,
                r=int(header.meta["r"]),
                omega=arrays["omega"],
                observed=arrays["observed"],
                m_true=m_true,
                meta=meta,
            )
    except (KeyError, ValidationError) as exception:
        raise InstanceFormatError(f"{path}: incomplete instance") from exception

    _LOGGER.debug("Loaded instance %s from %s", problem, path)
    return problem, header.mu


def instance_digest(problem: Problem) -> str:
    """Return a one-line summary of the instance dimensions and seed."""
    if isinstance(problem, BasisPursuitProblem):
        m, n = problem.shape
        parts = [f"n={n}", f"m={m}"]
        if problem.meta is not None:
            parts += [
                f"s={problem.meta.s}",
                f"matrix={problem.meta.matrix_kind.value}",
                f"signal={problem.meta.signal_kind.value}",
                f"seed={problem.meta.seed}",
            ]
        return ",".join(parts)
    parts = [
        f"n={problem.n}",
        f"r={problem.r}",
        f"p={problem.p}",
        f"SR={problem.sr:.4g}",
        f"FR={problem.fr:.4g}",
    ]
    if problem.meta is not None:
        parts.append(f"seed={problem.meta.seed}")
    return ",".join(parts)
