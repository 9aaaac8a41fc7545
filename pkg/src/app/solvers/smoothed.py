#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import math
from typing import Optional

import numpy as np

from src.app.kernel import GramMatrix, g_norm
from src.app.objectives import loss_from_decisions, smoothed_loss_at
from src.app.prox import ProxFunction, as_simplex, smoothed_argmin, uniform

from .enums import Algorithm, OutcomeKind
from .exceptions import SolverConfigurationError
from .harness import GramSolver
from .models import IterationRecord, SolveOutcome, SolverConfig


class SmoothedKernelPerceptron(GramSolver):
    """
    Excessive-gap iteration on the smoothed loss, parametrised by a prox-function.

    With theta_k = 2 / (k + 3) and mu_0 = 2 lambda_sharp:

        alpha_{k+1} = (1 - theta_k)(alpha_k + theta_k p_k) + theta_k^2 p_{mu_k}(alpha_k)
        mu_{k+1}    = (1 - theta_k) mu_k
        p_{k+1}     = (1 - theta_k) p_k + theta_k p_{mu_{k+1}}(alpha_{k+1})

    The smoothed minimizer used by p_{k+1} is the one alpha_{k+2} needs, so it is
    kept together with its product with G and each update costs one mat-vec.
    The entropy prox centered at the uniform distribution gives snkp, the euclidean
    prox centered at q together with a dual threshold delta gives snkpvn.
    """

    def __init__(
        self,
        G: GramMatrix,
        prox: ProxFunction,
        config: SolverConfig,
        delta: Optional[float] = None,
        algorithm: Algorithm = Algorithm.SNKP,
        **kwargs,
    ):
        super().__init__(G, config, **kwargs)
        if prox.size != G.size:
            raise SolverConfigurationError(
                f"prox-function has size {prox.size}, Gram matrix has size {G.size}"
            )
        self.algorithm = algorithm
        self.prox = prox
        self.delta = delta

        self.mu = prox.mu0
        self.alpha = np.array(prox.prox_center)
        self.g_alpha = G.matvec(self.alpha)
        self.smoothed = smoothed_argmin(prox, self.g_alpha, self.mu)
        self.g_smoothed = G.matvec(self.smoothed)
        self.p = self.smoothed
        self.g_p = self.g_smoothed

    def _p_gnorm(self) -> float:
        return math.sqrt(max(float(self.p @ self.g_p), 0.0))

    def _exit(self, k: int) -> Optional[OutcomeKind]:
        if self._confirmed(lambda: self.g_alpha.min() > 0.0):
            return OutcomeKind.PRIMAL
        if self.delta is not None and self._confirmed(lambda: self._p_gnorm() < self.delta):
            return OutcomeKind.DUAL
        return None

    def _step(self, k: int) -> None:
        theta = 2.0 / (k + 3)
        keep = 1.0 - theta

        self.alpha = keep * (self.alpha + theta * self.p) + theta**2 * self.smoothed
        self.g_alpha = keep * (self.g_alpha + theta * self.g_p) + theta**2 * self.g_smoothed
        self.mu = keep * self.mu

        self.smoothed = smoothed_argmin(self.prox, self.g_alpha, self.mu)
        self.g_smoothed = self.G.matvec(self.smoothed)
        self.p = keep * self.p + theta * self.smoothed
        self.g_p = keep * self.g_p + theta * self.g_smoothed

    def _refresh(self) -> None:
        self.g_alpha = self.G.matvec(self.alpha)
        self.g_p = self.G.matvec(self.p)
        self.g_smoothed = self.G.matvec(self.smoothed)

    def _record(self, k: int) -> IterationRecord:
        # self.smoothed is exactly p_{mu_k}(alpha_k), the maximizer defining L_mu
        return IterationRecord(
            k=k + self.trace_offset,
            mu=self.mu,
            loss=loss_from_decisions(self.g_alpha, self.alpha),
            smoothed_loss=smoothed_loss_at(
                self.prox, self.g_alpha, self.alpha, self.mu, self.smoothed
            ),
            p_gnorm=self._p_gnorm(),
            min_decision=float(self.g_alpha.min()),
        )

    def _outcome(self, kind: OutcomeKind, iterations: int) -> SolveOutcome:
        p = self.p / np.sum(self.p)
        return SolveOutcome(
            kind=kind,
            algorithm=self.algorithm,
            iterations=iterations,
            alpha=self.alpha,
            p=p,
            g_norm=g_norm(self.G, p),
            last=self._record(iterations) if kind is OutcomeKind.LIMIT else None,
            trace=self.trace,
        )


def snkp(G: GramMatrix, config: SolverConfig) -> SolveOutcome:
    return SmoothedKernelPerceptron(G, ProxFunction.entropy(G.size), config).solve()


def snkpvn(
    G: GramMatrix, q, delta: float, config: SolverConfig, **kwargs
) -> SolveOutcome:
    """
    Smoothed kernel perceptron with a Von-Neumann style dual exit.

    Args:
        G (GramMatrix): Normalized signed Gram matrix.
        q: Start point and center of the euclidean prox, a distribution.
        delta (float): Returns p with ||p||_G < delta when no separator is found first.
        config (SolverConfig): Iteration cap and trace cadence.

    Returns:
        SolveOutcome: primal, dual or limit.

    Raises:
        SolverConfigurationError: If delta is not positive.
    """
    if not delta > 0:
        raise SolverConfigurationError(f"snkpvn needs delta > 0, got {delta!r}")
    q = as_simplex(q, "q") if q is not None else uniform(G.size)
    prox = ProxFunction.euclidean(q)
    return SmoothedKernelPerceptron(
        G, prox, config, delta=delta, algorithm=Algorithm.SNKPVN, **kwargs
    ).solve()
