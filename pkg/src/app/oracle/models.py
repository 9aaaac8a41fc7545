#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import numpy as np
from pydantic import field_validator

from src.app.prox import as_simplex
from src.app.utils.models import FrozenModel


class OracleReport(FrozenModel):
    feasible: bool
    # min over the simplex of ||p||_G, the margin when the instance is feasible
    margin_estimate: float
    minimizer: np.ndarray
    iterations: int

    @field_validator("minimizer", mode="before")
    @classmethod
    def parse_minimizer(cls, value) -> np.ndarray:
        return as_simplex(value, "minimizer")
