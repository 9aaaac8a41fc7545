#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import logging
from typing import Callable, List, Optional

from src.app.kernel import GramMatrix
from src.app.utils.log import setup_logger

from .enums import Algorithm, OutcomeKind
from .models import IterationRecord, SolveOutcome, SolverConfig


class IterativeSolver:
    """
    Loop shared by every solver.

    Each iteration k first asks `_exit(k)` whether the current iterate is a
    certificate, then stops on the iteration cap, then records a trace entry when
    (k + trace_offset) is a multiple of `trace_every`, and finally performs one
    update via `_step(k)`. The number of iterations is the number of updates.
    Records carry `trace_round` when a restart loop runs the solver repeatedly.
    """

    algorithm: Algorithm

    def __init__(
        self,
        config: SolverConfig,
        trace_offset: int = 0,
        trace_round: int = 0,
        verbose: bool = True,
    ):
        self.config = config
        self.trace_offset = trace_offset
        self.trace_round = trace_round
        self.trace: List[IterationRecord] = []
        self.log_level = logging.INFO if verbose else logging.DEBUG
        self.logger = setup_logger(self.__class__.__name__)

    @property
    def size(self) -> int:
        raise NotImplementedError

    def solve(self) -> SolveOutcome:
        config = self.config
        self.logger.log(
            self.log_level,
            f"Starting {self.algorithm} on n={self.size} with max_iterations={config.max_iterations}",
        )

        k = 0
        while True:
            kind = self._exit(k)
            if kind is not None:
                break
            if k >= config.max_iterations:
                kind = OutcomeKind.LIMIT
                break
            if config.trace_every and (k + self.trace_offset) % config.trace_every == 0:
                record = self._record(k)
                if self.trace_round:
                    record = record.model_copy(update={"round": self.trace_round})
                self.trace.append(record)
                self.logger.debug(f"{self.algorithm} {record}")
            self._step(k)
            k += 1
            if k % config.refresh_interval == 0:
                self._refresh()

        outcome = self._outcome(kind, k)
        self.logger.log(self.log_level, f"{self.algorithm} finished with {kind} after {k} iterations")
        return outcome

    def _exit(self, k: int) -> Optional[OutcomeKind]:
        # Intended to be overridden in subclasses
        return None

    def _step(self, k: int) -> None:
        raise NotImplementedError

    def _record(self, k: int) -> IterationRecord:
        return IterationRecord(k=k + self.trace_offset)

    def _refresh(self) -> None:
        # Recompute incrementally maintained products from scratch
        pass

    def _outcome(self, kind: OutcomeKind, iterations: int) -> SolveOutcome:
        raise NotImplementedError


class GramSolver(IterativeSolver):
    """Solver that only sees the normalized signed Gram matrix G."""

    def __init__(self, G: GramMatrix, config: SolverConfig, **kwargs):
        super().__init__(config, **kwargs)
        self.G = G

    @property
    def size(self) -> int:
        return self.G.size

    def _confirmed(self, test: Callable[[], bool]) -> bool:
        # An exit seen on drifted products is re-checked on fresh ones
        if not test():
            return False
        self._refresh()
        return test()
