#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from .exceptions import InputShapeError


class FrozenModel(BaseModel):
    """Immutable model that may hold numpy arrays."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def as_vector(value, name: str = "vector", size: Optional[int] = None) -> np.ndarray:
    """
    Convert `value` into a finite, read-only float64 1-d array.

    Args:
        value: Anything numpy can turn into a 1-d array.
        name (str): Used in error messages.
        size (int, optional): Required length.

    Returns:
        np.ndarray: A read-only copy.

    Raises:
        InputShapeError: On wrong dimensionality, length or non-finite entries.
    """
    array = np.array(value, dtype=np.float64)
    if array.ndim != 1:
        raise InputShapeError(f"{name} must be one-dimensional, got shape {array.shape}")
    if size is not None and array.shape[0] != size:
        raise InputShapeError(
            f"{name} has length {array.shape[0]}, expected {size}",
            details={"expected": size, "actual": array.shape[0]},
        )
    if not np.all(np.isfinite(array)):
        raise InputShapeError(f"{name} contains non-finite entries")
    array.setflags(write=False)
    return array


def as_matrix(value, name: str = "matrix") -> np.ndarray:
    """Convert `value` into a finite, read-only float64 2-d array."""
    array = np.array(value, dtype=np.float64)
    if array.ndim != 2:
        raise InputShapeError(f"{name} must be two-dimensional, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise InputShapeError(f"{name} contains non-finite entries")
    array.setflags(write=False)
    return array
