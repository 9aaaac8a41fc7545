#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import math
from typing import Optional

import numpy as np

from src.app.kernel import GramMatrix, g_norm
from src.app.prox import uniform

from .enums import Algorithm, OutcomeKind
from .harness import GramSolver
from .models import IterationRecord, SolveOutcome, SolverConfig


class NormalizedVonNeumann(GramSolver):
    """
    Von-Neumann iteration in coefficient space.

    The iterate p_k stands for w_k = sum_i p_i y_i phi(x_i). Each update moves p
    towards the vertex e_j of the worst classified point j with the exact line search

        lambda = clamp(<p, p - e_j>_G / ||p - e_j||_G^2, 0, 1)

    and updates G p from column j, so no mat-vec is needed.
    """

    algorithm = Algorithm.NVN

    def __init__(self, G: GramMatrix, config: SolverConfig, **kwargs):
        super().__init__(G, config, **kwargs)
        self.p = np.array(uniform(G.size))
        self.g_p = G.matvec(self.p)

    def _p_gnorm(self) -> float:
        return math.sqrt(max(float(self.p @ self.g_p), 0.0))

    def _exit(self, k: int) -> Optional[OutcomeKind]:
        if self._confirmed(lambda: self.g_p.min() > 0.0):
            return OutcomeKind.PRIMAL
        if self._confirmed(lambda: self._p_gnorm() <= self.config.dual_epsilon):
            return OutcomeKind.DUAL
        return None

    def _step(self, k: int) -> None:
        j = int(np.argmin(self.g_p))
        squared = float(self.p @ self.g_p)
        toward = float(self.g_p[j])
        # ||p - e_j||_G^2 = p^T G p - 2 (G p)_j + G_jj
        denominator = squared - 2.0 * toward + 1.0
        if denominator <= 0.0:
            step = 0.0
        else:
            step = min(max((squared - toward) / denominator, 0.0), 1.0)

        self.p = (1.0 - step) * self.p
        self.p[j] += step
        self.g_p = (1.0 - step) * self.g_p + step * self.G.column(j)

    def _refresh(self) -> None:
        self.g_p = self.G.matvec(self.p)

    def _record(self, k: int) -> IterationRecord:
        return IterationRecord(
            k=k + self.trace_offset,
            p_gnorm=self._p_gnorm(),
            min_decision=float(self.g_p.min()),
        )

    def _outcome(self, kind: OutcomeKind, iterations: int) -> SolveOutcome:
        p = self.p / np.sum(self.p)
        return SolveOutcome(
            kind=kind,
            algorithm=self.algorithm,
            iterations=iterations,
            alpha=p if kind is OutcomeKind.PRIMAL else None,
            p=p,
            g_norm=g_norm(self.G, p),
            last=self._record(iterations) if kind is OutcomeKind.LIMIT else None,
            trace=self.trace,
        )


def nvn(G: GramMatrix, config: SolverConfig) -> SolveOutcome:
    return NormalizedVonNeumann(G, config).solve()
