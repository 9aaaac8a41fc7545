#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Optional

from src.app.utils.exceptions import KernelFeasibilityError


class UsageError(KernelFeasibilityError):
    """Is being raised, when the command line names an unknown option or an invalid combination"""


class MissingInputError(KernelFeasibilityError):
    """Is being raised, when an input file does not exist or cannot be read"""


class DatasetParseError(KernelFeasibilityError):
    """Is being raised, when a CSV input file cannot be parsed"""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(
            f"{message} (line {line})" if line is not None else message, details={"line": line}
        )
        self.line = line
