"""Input validation helpers used across the public API surface."""

from __future__ import annotations

import numpy as np

from .exceptions import TooShortError


def as_float_1d(x, name: str = "x", min_len: int = 0) -> np.ndarray:
    """Coerce array-like input to a contiguous 1-D float64 array.

    Accepts anything with a ``values`` attribute (ReturnSeries, pandas
    Series), plain sequences, and (n, 1) column vectors.
    """
    if hasattr(x, "values"):
        x = x.values
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if arr.size < min_len:
        raise TooShortError(f"{name} needs >= {min_len} observations, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return np.ascontiguousarray(arr)


def require_finite_scalar(value, name: str) -> float:
    v = float(value)
    if not np.isfinite(v):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return v


def require_positive(value, name: str, exc=ValueError) -> float:
    v = require_finite_scalar(value, name)
    if v <= 0:
        raise exc(f"{name} must be > 0, got {value!r}")
    return v
