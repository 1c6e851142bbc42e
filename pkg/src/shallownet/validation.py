"""Small input-validation helpers used by the functional core.

The sklearn-facing estimators use ``sklearn.utils.validation``; these
helpers serve the lower-level functions that work on plain arrays.
"""

from __future__ import annotations

import numpy as np


def as_float_matrix(x, name: str = "X") -> np.ndarray:
    """Coerce to a 2-D float64 array, rejecting non-finite entries."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be a 2-D array, got shape {arr.shape}")
    check_finite(arr, name)
    return arr


def as_float_vector(x, name: str = "y") -> np.ndarray:
    """Coerce to a 1-D float64 array, rejecting non-finite entries."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a 1-D array, got shape {arr.shape}")
    check_finite(arr, name)
    return arr


def check_finite(arr: np.ndarray, name: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinite entries")


def check_same_length(a: np.ndarray, b: np.ndarray, what: str = "vectors") -> None:
    if len(a) != len(b):
        raise ValueError(f"{what} have mismatched lengths: {len(a)} vs {len(b)}")


def check_row_indices(rows, n: int, name: str = "rows") -> np.ndarray:
    """Validate a list of row indices against a table of ``n`` rows."""
    idx = np.asarray(rows, dtype=np.intp)
    if idx.ndim != 1:
        raise ValueError(f"{name} must be a flat index list")
    if idx.size and (idx.min() < 0 or idx.max() >= n):
        raise ValueError(f"{name} contains indices outside [0, {n})")
    return idx
