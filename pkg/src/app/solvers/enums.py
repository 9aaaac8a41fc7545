#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from enum import Enum


class Algorithm(Enum):
    PERCEPTRON = "perceptron"
    NORMALIZED_PERCEPTRON = "normalized-perceptron"
    NKP = "nkp"
    SNKP = "snkp"
    NVN = "nvn"
    SNKPVN = "snkpvn"
    ISNKPVN = "isnkpvn"

    def __str__(self):
        return self.value

    @property
    def linear_only(self) -> bool:
        return self in (Algorithm.PERCEPTRON, Algorithm.NORMALIZED_PERCEPTRON)


class OutcomeKind(Enum):
    PRIMAL = "primal"
    DUAL = "dual"
    LIMIT = "limit"

    def __str__(self):
        return self.value

    @property
    def exit_status(self) -> int:
        return {OutcomeKind.PRIMAL: 0, OutcomeKind.DUAL: 1, OutcomeKind.LIMIT: 2}[self]
