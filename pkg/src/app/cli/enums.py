#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from enum import Enum, IntEnum


class Command(Enum):
    SOLVE = "solve"
    CERTIFY = "certify"
    MARGIN = "margin"
    BENCH = "bench"

    def __str__(self):
        return self.value


class ExitStatus(IntEnum):
    PRIMAL = 0
    DUAL = 1
    LIMIT = 2
    USAGE = 64
    DATA = 65
    NO_INPUT = 66
    INTERNAL = 70
