#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Any, Optional


class KernelFeasibilityError(Exception):
    """Base class of every error raised by the toolkit"""

    def __init__(self, message: str = None, details: Optional[Any] = None):
        super().__init__(message)
        self.details = details


class InputShapeError(KernelFeasibilityError):
    """Is being raised, when an array does not have the expected shape or holds non-finite values"""
