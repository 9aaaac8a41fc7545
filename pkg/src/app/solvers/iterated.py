#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import List

import numpy as np

from src.app.kernel import GramMatrix, g_norm
from src.app.prox import uniform
from src.app.utils.log import setup_logger

from .enums import Algorithm, OutcomeKind
from .exceptions import SolverConfigurationError
from .models import IterationRecord, SolveOutcome, SolverConfig
from .smoothed import snkpvn

logger = setup_logger(__name__)


def isnkpvn(G: GramMatrix, config: SolverConfig) -> SolveOutcome:
    """
    Restart snkpvn with shrinking dual thresholds until a certificate appears.

    Outer round t starts from q_t (q_0 uniform), sets delta_t = ||q_t||_G / gamma and
    takes q_{t+1} from snkpvn(q_t, delta_t). A primal answer from any round is
    returned as is. The run stops with a dual answer once delta_t < epsilon, or at
    once when ||q_t||_G <= epsilon already. The iteration cap is shared by all rounds.

    Args:
        G (GramMatrix): Normalized signed Gram matrix.
        config (SolverConfig): Needs dual_epsilon > 0 and gamma > 1.

    Returns:
        SolveOutcome: primal, dual with ||p||_G <= epsilon, or limit.

    Raises:
        SolverConfigurationError: If dual_epsilon is not positive.
    """
    epsilon = config.dual_epsilon
    if not epsilon > 0:
        raise SolverConfigurationError(f"isnkpvn needs epsilon > 0, got {epsilon!r}")

    logger.info(
        f"Starting {Algorithm.ISNKPVN} on n={G.size} with epsilon={epsilon:g}, "
        f"gamma={config.gamma:g}, max_iterations={config.max_iterations}"
    )
    q = uniform(G.size)
    used = 0
    rounds = 0
    trace: List[IterationRecord] = []

    def finish(kind: OutcomeKind, **fields) -> SolveOutcome:
        logger.info(
            f"{Algorithm.ISNKPVN} finished with {kind} after {used} iterations in {rounds} rounds"
        )
        return SolveOutcome(
            kind=kind, algorithm=Algorithm.ISNKPVN, iterations=used, trace=trace, **fields
        )

    while True:
        g_q = G.matvec(q)
        q_norm = g_norm(G, q)
        if q_norm <= epsilon:
            if g_q.min() > 0.0:
                return finish(OutcomeKind.PRIMAL, alpha=q)
            return finish(OutcomeKind.DUAL, p=q, g_norm=q_norm)

        remaining = config.max_iterations - used
        if remaining < 1:
            last = IterationRecord(k=used, p_gnorm=q_norm, min_decision=float(g_q.min()))
            return finish(OutcomeKind.LIMIT, p=q, last=last)

        delta = q_norm / config.gamma
        logger.debug(f"Round {rounds}: ||q||_G = {q_norm:.6g}, delta = {delta:.6g}")
        inner = snkpvn(
            G,
            q,
            delta,
            config.model_copy(update={"max_iterations": remaining}),
            trace_offset=used,
            trace_round=rounds,
            verbose=False,
        )
        used += inner.iterations
        rounds += 1
        trace.extend(inner.trace)

        match inner.kind:
            case OutcomeKind.PRIMAL:
                return finish(OutcomeKind.PRIMAL, alpha=inner.alpha)
            case OutcomeKind.LIMIT:
                return finish(OutcomeKind.LIMIT, alpha=inner.alpha, p=inner.p, last=inner.last)

        # inner.p has ||p||_G < delta
        q = np.maximum(inner.p, 0.0)
        q = q / np.sum(q)
        if delta < epsilon:
            return finish(OutcomeKind.DUAL, p=q, g_norm=g_norm(G, q))
