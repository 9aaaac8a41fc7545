#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from enum import Enum


class VerdictKind(Enum):
    PRIMAL_FEASIBLE = "primal_feasible"
    DUAL_EPSILON = "dual_epsilon"
    FAILURE = "failure"

    def __str__(self):
        return self.value
