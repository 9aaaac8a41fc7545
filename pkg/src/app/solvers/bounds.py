#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import math
from typing import Optional

from .enums import Algorithm
from .exceptions import SolverConfigurationError


def _positive(value: Optional[float], name: str, algorithm: Algorithm) -> float:
    if value is None or not value > 0:
        raise SolverConfigurationError(
            f"the {algorithm} bound needs a positive {name}, got {value!r}"
        )
    return float(value)


def iteration_bound(
    algorithm: Algorithm,
    n: int,
    margin: Optional[float] = None,
    epsilon: Optional[float] = None,
    gamma: float = 2.0,
    radius: float = 1.0,
) -> int:
    """
    Worst-case number of updates an algorithm needs.

    Args:
        algorithm (Algorithm): Which algorithm.
        n (int): Number of points.
        margin (float, optional): Normalized margin rho_K > 0 of a feasible instance.
            For the classic perceptron it is the unnormalized margin.
        epsilon (float, optional): Dual accuracy, used by nvn and by isnkpvn when no
            margin is given.
        gamma (float): Outer shrink factor of isnkpvn.
        radius (float): max_i ||x_i||, only used by the classic perceptron.

    Returns:
        int: The bound, rounded up.

    Raises:
        SolverConfigurationError: If the quantity the bound depends on is missing.
    """
    match algorithm:
        case Algorithm.PERCEPTRON:
            rho = _positive(margin, "margin", algorithm)
            return math.ceil(radius**2 / rho**2)
        case Algorithm.NORMALIZED_PERCEPTRON | Algorithm.NKP:
            rho = _positive(margin, "margin", algorithm)
            return math.ceil(1.0 / rho**2)
        case Algorithm.SNKP:
            rho = _positive(margin, "margin", algorithm)
            return math.ceil(2.0 * math.sqrt(2.0 * math.log(n)) / rho)
        case Algorithm.SNKPVN:
            rho = _positive(margin, "margin", algorithm)
            return math.ceil(2.0 * math.sqrt(2.0 * n) / rho)
        case Algorithm.NVN:
            eps = _positive(epsilon, "epsilon", algorithm)
            return math.ceil(1.0 / eps**2)
        case Algorithm.ISNKPVN:
            if margin is not None and margin > 0:
                outer = max(math.log(1.0 / margin), 0.0) / math.log(gamma) + 1.0
                return math.ceil(2.0 * math.sqrt(2.0 * n) / margin * outer)
            eps = _positive(epsilon, "epsilon", algorithm)
            outer = max(math.log(1.0 / eps), 0.0) / math.log(gamma) + 1.0
            return math.ceil(4.0 * math.sqrt(n) / eps * outer)
