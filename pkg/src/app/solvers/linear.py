#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Optional

import numpy as np

from src.app.kernel import LabeledDataset
from src.app.prox import worst_case_distribution

from .enums import Algorithm, OutcomeKind
from .harness import IterativeSolver
from .models import IterationRecord, SolveOutcome, SolverConfig


class Perceptron(IterativeSolver):
    """Classic perceptron on raw features: w += y_i x_i for the smallest misclassified i."""

    algorithm = Algorithm.PERCEPTRON

    def __init__(self, data: LabeledDataset, config: SolverConfig, **kwargs):
        super().__init__(config, **kwargs)
        self.data = data
        self.signed = data.labels[:, None] * data.points
        self.weights = np.zeros(data.d)
        self.counts = np.zeros(data.n)
        self.margins = np.zeros(data.n)

    @property
    def size(self) -> int:
        return self.data.n

    def _exit(self, k: int) -> Optional[OutcomeKind]:
        self.margins = self.signed @ self.weights
        return OutcomeKind.PRIMAL if self.margins.min() > 0.0 else None

    def _step(self, k: int) -> None:
        i = int(np.flatnonzero(self.margins <= 0.0)[0])
        self.weights = self.weights + self.signed[i]
        self.counts[i] += 1

    def _record(self, k: int) -> IterationRecord:
        return IterationRecord(k=k + self.trace_offset, min_decision=float(self.margins.min()))

    def _outcome(self, kind: OutcomeKind, iterations: int) -> SolveOutcome:
        # w = sum_i c_i y_i x_i, i.e. alpha_i = c_i ||x_i|| over the normalized features
        alpha = self.counts * np.linalg.norm(self.data.points, axis=1)
        return SolveOutcome(
            kind=kind,
            algorithm=self.algorithm,
            iterations=iterations,
            alpha=alpha,
            weights=self.weights,
            counts=self.counts,
            last=self._record(iterations) if kind is OutcomeKind.LIMIT else None,
            trace=self.trace,
        )


class NormalizedPerceptron(IterativeSolver):
    """
    Perceptron on l2-normalized points with averaged updates:
    w_{k+1} = (1 - theta_k) w_k + theta_k XY p(w_k), theta_k = 1 / (k + 1).
    """

    algorithm = Algorithm.NORMALIZED_PERCEPTRON

    def __init__(self, data: LabeledDataset, config: SolverConfig, **kwargs):
        super().__init__(config, **kwargs)
        self.data = data
        self.signed = data.signed_normalized_points()
        self.alpha = np.zeros(data.n)
        self.weights = np.zeros(data.d)
        self.margins = np.zeros(data.n)

    @property
    def size(self) -> int:
        return self.data.n

    def _exit(self, k: int) -> Optional[OutcomeKind]:
        self.margins = self.signed @ self.weights
        return OutcomeKind.PRIMAL if self.margins.min() > 0.0 else None

    def _step(self, k: int) -> None:
        theta = 1.0 / (k + 1)
        p = worst_case_distribution(self.margins)
        self.alpha = (1.0 - theta) * self.alpha + theta * p
        self.weights = (1.0 - theta) * self.weights + theta * (self.signed.T @ p)

    def _record(self, k: int) -> IterationRecord:
        return IterationRecord(k=k + self.trace_offset, min_decision=float(self.margins.min()))

    def _outcome(self, kind: OutcomeKind, iterations: int) -> SolveOutcome:
        return SolveOutcome(
            kind=kind,
            algorithm=self.algorithm,
            iterations=iterations,
            alpha=self.alpha,
            weights=self.weights,
            last=self._record(iterations) if kind is OutcomeKind.LIMIT else None,
            trace=self.trace,
        )


def perceptron(data: LabeledDataset, config: SolverConfig) -> SolveOutcome:
    return Perceptron(data, config).solve()


def normalized_perceptron(data: LabeledDataset, config: SolverConfig) -> SolveOutcome:
    return NormalizedPerceptron(data, config).solve()
