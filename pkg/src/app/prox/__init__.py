#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from .enums import ProxKind
from .exceptions import SimplexViolationError, SmoothingParameterError
from .models import (
    SIMPLEX_TOLERANCE,
    ProxFunction,
    SimplexVector,
    as_simplex,
    in_simplex,
    uniform,
)
from .simplex import (
    project_simplex,
    prox_value,
    smoothed_argmin,
    smoothing_schedule,
    worst_case_distribution,
)

__all__ = [
    "ProxKind",
    "ProxFunction",
    "SimplexVector",
    "SIMPLEX_TOLERANCE",
    "as_simplex",
    "in_simplex",
    "uniform",
    "worst_case_distribution",
    "prox_value",
    "smoothed_argmin",
    "smoothing_schedule",
    "project_simplex",
    "SimplexViolationError",
    "SmoothingParameterError",
]
