#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from .bounds import iteration_bound
from .enums import Algorithm, OutcomeKind
from .exceptions import SolverConfigurationError
from .harness import GramSolver, IterativeSolver
from .iterated import isnkpvn
from .linear import NormalizedPerceptron, Perceptron, normalized_perceptron, perceptron
from .models import IterationRecord, SolveOutcome, SolverConfig
from .nkp import NormalizedKernelPerceptron, nkp
from .registry import SOLVERS, run_solver
from .smoothed import SmoothedKernelPerceptron, snkp, snkpvn
from .von_neumann import NormalizedVonNeumann, nvn

__all__ = [
    "Algorithm",
    "OutcomeKind",
    "SolverConfig",
    "IterationRecord",
    "SolveOutcome",
    "SolverConfigurationError",
    "IterativeSolver",
    "GramSolver",
    "Perceptron",
    "NormalizedPerceptron",
    "NormalizedKernelPerceptron",
    "SmoothedKernelPerceptron",
    "NormalizedVonNeumann",
    "perceptron",
    "normalized_perceptron",
    "nkp",
    "snkp",
    "nvn",
    "snkpvn",
    "isnkpvn",
    "iteration_bound",
    "SOLVERS",
    "run_solver",
]
