"""Resource guards for the exhaustive-search entry points.

The environment variable ARF_ENGINE_MAX_DIM, when set, replaces every
default dimension cap.
"""

from __future__ import annotations

import os

ENV_VAR = "ARF_ENGINE_MAX_DIM"


class DimensionGuardError(ValueError):
    """An exhaustive operation was asked to run beyond its dimension cap."""


def max_dim(default: int) -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None


def check_dim(dim: int, default: int, what: str) -> None:
    limit = max_dim(default)
    if dim > limit:
        raise DimensionGuardError(
            f"{what} is capped at dimension {limit} (requested {dim}); "
            f"set {ENV_VAR} to override")
