#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from src.app.utils.exceptions import KernelFeasibilityError


class UnsupportedSizeError(KernelFeasibilityError):
    """Is being raised, when an exact oracle is asked for an instance size it cannot enumerate"""


class OracleToleranceError(KernelFeasibilityError):
    """Is being raised, when the oracle tolerance is not strictly positive"""
