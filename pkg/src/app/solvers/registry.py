#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Callable, Dict, Optional

from src.app.kernel import GramMatrix, LabeledDataset

from .enums import Algorithm
from .exceptions import SolverConfigurationError
from .iterated import isnkpvn
from .linear import normalized_perceptron, perceptron
from .models import SolveOutcome, SolverConfig
from .nkp import nkp
from .smoothed import snkp, snkpvn
from .von_neumann import nvn

# Uniform signature: (data, G, config, delta) -> SolveOutcome
SolverFunction = Callable[
    [Optional[LabeledDataset], Optional[GramMatrix], SolverConfig, Optional[float]], SolveOutcome
]

SOLVERS: Dict[Algorithm, SolverFunction] = {
    Algorithm.PERCEPTRON: lambda data, G, config, delta: perceptron(data, config),
    Algorithm.NORMALIZED_PERCEPTRON: lambda data, G, config, delta: normalized_perceptron(
        data, config
    ),
    Algorithm.NKP: lambda data, G, config, delta: nkp(G, config),
    Algorithm.SNKP: lambda data, G, config, delta: snkp(G, config),
    Algorithm.NVN: lambda data, G, config, delta: nvn(G, config),
    Algorithm.SNKPVN: lambda data, G, config, delta: snkpvn(G, None, delta, config),
    Algorithm.ISNKPVN: lambda data, G, config, delta: isnkpvn(G, config),
}


def run_solver(
    algorithm: Algorithm,
    config: SolverConfig,
    data: Optional[LabeledDataset] = None,
    G: Optional[GramMatrix] = None,
    delta: Optional[float] = None,
) -> SolveOutcome:
    """
    Dispatch to one algorithm.

    Raises:
        SolverConfigurationError: If the inputs the algorithm needs are missing.
    """
    if algorithm.linear_only and data is None:
        raise SolverConfigurationError(f"{algorithm} runs on raw features and needs a dataset")
    if not algorithm.linear_only and G is None:
        raise SolverConfigurationError(f"{algorithm} needs a Gram matrix")
    if algorithm is Algorithm.SNKPVN and delta is None:
        raise SolverConfigurationError("snkpvn needs a dual threshold delta")
    return SOLVERS[algorithm](data, G, config, delta)
