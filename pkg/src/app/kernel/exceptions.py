#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from src.app.utils.exceptions import InputShapeError, KernelFeasibilityError


class DimensionMismatchError(InputShapeError):
    """Is being raised, when two vectors or a vector and a matrix do not fit together"""


class DatasetValidationError(KernelFeasibilityError):
    """Is being raised, when a labeled dataset violates its invariants"""


class KernelValidationError(KernelFeasibilityError):
    """Is being raised, when a kernel specification or a raw kernel matrix is invalid"""


class DegeneratePointError(KernelFeasibilityError):
    """Is being raised, when a point has K(x_i, x_i) <= 0 and cannot be normalized"""

    def __init__(self, index: int, value: float):
        super().__init__(
            f"point {index} is degenerate under the kernel: K(x, x) = {value!r}",
            details={"index": index, "value": value},
        )
        self.index = index
        self.value = value


class UnsupportedOperationError(KernelFeasibilityError):
    """Is being raised, when an operation is not defined for the chosen kernel"""
