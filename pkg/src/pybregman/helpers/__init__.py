"""Small shared helpers for pybregman."""

from __future__ import annotations

import logging
import os
import tempfile
from pathlib import Path

_LOGGER = logging.getLogger(__name__)

THREADS_ENV_VAR = "BREGMAN_ACCEL_THREADS"


def atomic_write_bytes(path: str | Path, payload: bytes) -> Path:
    """Write payload to path atomically.

    The data goes to a temporary file in the target directory first and is
    then moved over the destination with os.replace.

    Args:
    ----
        path: destination file
        payload: bytes

    Returns:
    -------
        The destination path.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent)
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(payload)
        os.replace(tmp_name, target)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    _LOGGER.debug("Wrote %s (%d bytes)", target, len(payload))
    return target


def atomic_write_text(path: str | Path, text: str) -> Path:
    """Write utf-8 text to path atomically.

    Args:
    ----
        path: destination file
        text: str

    Returns:
    -------
        The destination path.
    """
    return atomic_write_bytes(path, text.encode("utf-8"))


def get_max_workers(default: int | None = None) -> int:
    """Return the number of parallel workers for experiment grids.

    Reads BREGMAN_ACCEL_THREADS; falls back to the machine parallelism.

    Args:
    ----
        default: override for the fallback value

    Returns:
    -------
        int >= 1
    """
    fallback = default if default is not None else (os.cpu_count() or 1)
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return max(1, fallback)
    try:
        value = int(raw)
    except ValueError:
        _LOGGER.warning("Ignoring non-integer %s=%r", THREADS_ENV_VAR, raw)
        return max(1, fallback)
    return max(1, value)
