"""
Shared argument handling for the vectorized closed forms.

Every closed form accepts a Python float or a numpy array and returns the
same shape back (a float for scalar input).
"""

from typing import Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import DomainError

FloatOrArray = Union[float, NDArray[np.float64]]


def as_float_array(value: ArrayLike, name: str) -> NDArray[np.float64]:
    """Coerce to a float64 array and reject NaN/inf."""
    arr = np.asarray(value, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return arr


def check_reflectivity(r: ArrayLike) -> NDArray[np.float64]:
    arr = as_float_array(r, "reflectivity r")
    if np.any((arr < 0.0) | (arr > 1.0)):
        raise DomainError(f"reflectivity r must lie in [0, 1], got {r!r}")
    return arr


def check_nbar(nbar: ArrayLike) -> NDArray[np.float64]:
    arr = as_float_array(nbar, "mean photon number nbar")
    if np.any(arr < 0.0):
        raise DomainError(f"mean photon number nbar must be >= 0, got {nbar!r}")
    return arr


def check_unit_interval(value: ArrayLike, name: str) -> NDArray[np.float64]:
    arr = as_float_array(value, name)
    if np.any((arr < 0.0) | (arr > 1.0)):
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return arr


def check_gap(gap: ArrayLike) -> NDArray[np.float64]:
    """Validate a reflectivity gap 1 - r."""
    arr = as_float_array(gap, "reflectivity gap 1-r")
    if np.any((arr < 0.0) | (arr > 1.0)):
        raise DomainError(f"reflectivity gap 1-r must lie in [0, 1], got {gap!r}")
    return arr


def one_minus_sqrt_gap(gap: NDArray[np.float64]) -> NDArray[np.float64]:
    """1 - √r from the gap g = 1 - r, as g/(1 + √(1 - g))."""
    return gap / (1.0 + np.sqrt(1.0 - gap))


def one_minus_sqrt(r: NDArray[np.float64]) -> NDArray[np.float64]:
    """1 - √r evaluated as (1 - r)/(1 + √r)."""
    return (1.0 - r) / (1.0 + np.sqrt(r))


def to_output(arr: NDArray[np.float64]) -> FloatOrArray:
    """Return a Python float for 0-d results, the array otherwise."""
    arr = np.asarray(arr, dtype=np.float64)
    return float(arr) if arr.ndim == 0 else arr
