#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from src.app.utils.exceptions import InputShapeError, KernelFeasibilityError


class SmoothingParameterError(InputShapeError):
    """Is being raised, when a smoothing parameter mu is not strictly positive"""

    def __init__(self, mu: float):
        super().__init__(f"smoothing parameter must be > 0, got {mu!r}", details={"mu": mu})
        self.mu = mu


class SimplexViolationError(KernelFeasibilityError):
    """Is being raised, when a vector that must be a probability distribution is not one"""
