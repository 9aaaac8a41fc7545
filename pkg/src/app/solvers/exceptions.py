#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from src.app.utils.exceptions import KernelFeasibilityError


class SolverConfigurationError(KernelFeasibilityError):
    """Is being raised, when a solver is configured with parameters it cannot run with"""
