#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Optional

import numpy as np

from src.app.kernel import GramMatrix
from src.app.objectives import loss_from_decisions
from src.app.prox import worst_case_distribution

from .enums import Algorithm, OutcomeKind
from .harness import GramSolver
from .models import IterationRecord, SolveOutcome, SolverConfig


class NormalizedKernelPerceptron(GramSolver):
    """
    alpha_{k+1} = (1 - theta_k) alpha_k + theta_k p(alpha_k) with theta_k = 1 / (k + 1),
    starting from alpha_0 = 0. Every iterate after the first update is a distribution.
    """

    algorithm = Algorithm.NKP

    def __init__(self, G: GramMatrix, config: SolverConfig, **kwargs):
        super().__init__(G, config, **kwargs)
        self.alpha = np.zeros(G.size)
        self.g_alpha = np.zeros(G.size)

    def _exit(self, k: int) -> Optional[OutcomeKind]:
        if self._confirmed(lambda: self.g_alpha.min() > 0.0):
            return OutcomeKind.PRIMAL
        return None

    def _step(self, k: int) -> None:
        theta = 1.0 / (k + 1)
        p = worst_case_distribution(self.g_alpha)
        self.alpha = (1.0 - theta) * self.alpha + theta * p
        self.g_alpha = (1.0 - theta) * self.g_alpha + theta * self.G.matvec(p)

    def _refresh(self) -> None:
        self.g_alpha = self.G.matvec(self.alpha)

    def _record(self, k: int) -> IterationRecord:
        return IterationRecord(
            k=k + self.trace_offset,
            loss=loss_from_decisions(self.g_alpha, self.alpha),
            min_decision=float(self.g_alpha.min()),
        )

    def _outcome(self, kind: OutcomeKind, iterations: int) -> SolveOutcome:
        return SolveOutcome(
            kind=kind,
            algorithm=self.algorithm,
            iterations=iterations,
            alpha=self.alpha,
            last=self._record(iterations) if kind is OutcomeKind.LIMIT else None,
            trace=self.trace,
        )


def nkp(G: GramMatrix, config: SolverConfig) -> SolveOutcome:
    return NormalizedKernelPerceptron(G, config).solve()
