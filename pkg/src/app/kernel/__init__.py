#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from .enums import KernelKind
from .exceptions import (
    DatasetValidationError,
    DegeneratePointError,
    DimensionMismatchError,
    KernelValidationError,
    UnsupportedOperationError,
)
from .gram import (
    build_gram,
    decision_values,
    evaluate_kernel,
    g_inner,
    g_norm,
    kernel_diagonal,
    kernel_matrix,
    normalize_signed,
    predict,
)
from .models import (
    CoefficientVector,
    GramMatrix,
    KernelSpec,
    LabeledDataset,
    validate_raw_kernel,
)

__all__ = [
    "KernelKind",
    "KernelSpec",
    "LabeledDataset",
    "GramMatrix",
    "CoefficientVector",
    "validate_raw_kernel",
    "kernel_matrix",
    "kernel_diagonal",
    "evaluate_kernel",
    "normalize_signed",
    "build_gram",
    "g_inner",
    "g_norm",
    "decision_values",
    "predict",
    "DatasetValidationError",
    "DegeneratePointError",
    "DimensionMismatchError",
    "KernelValidationError",
    "UnsupportedOperationError",
]
