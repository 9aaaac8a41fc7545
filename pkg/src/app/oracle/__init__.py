#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from .exceptions import OracleToleranceError, UnsupportedSizeError
from .models import OracleReport
from .reference import (
    angular_margin_2d,
    brute_projection,
    exact_feasibility_2d,
    reference_min_gnorm,
)

__all__ = [
    "OracleReport",
    "reference_min_gnorm",
    "brute_projection",
    "exact_feasibility_2d",
    "angular_margin_2d",
    "OracleToleranceError",
    "UnsupportedSizeError",
]
