#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import List, Optional

import numpy as np
from pydantic import ValidationError, field_validator, model_validator

import src.conf as conf
from src.app.utils.models import FrozenModel

from .bounds import iteration_bound
from .enums import Algorithm, OutcomeKind
from .exceptions import SolverConfigurationError

BOUND_HEADROOM = 10


class SolverConfig(FrozenModel):
    max_iterations: int = conf.MAX_ITERATIONS
    dual_epsilon: float = conf.EPSILON
    gamma: float = conf.GAMMA
    trace_every: int = 0
    refresh_interval: int = conf.REFRESH_INTERVAL

    @model_validator(mode="after")
    def check_ranges(self) -> "SolverConfig":
        if self.max_iterations < 1:
            raise SolverConfigurationError(
                f"max_iterations must be >= 1, got {self.max_iterations}"
            )
        if not self.dual_epsilon >= 0:
            raise SolverConfigurationError(f"epsilon must be >= 0, got {self.dual_epsilon}")
        if not self.gamma > 1:
            raise SolverConfigurationError(f"gamma must be > 1, got {self.gamma}")
        if self.trace_every < 0:
            raise SolverConfigurationError(f"trace_every must be >= 0, got {self.trace_every}")
        if self.refresh_interval < 1:
            raise SolverConfigurationError(
                f"refresh_interval must be >= 1, got {self.refresh_interval}"
            )
        return self

    @classmethod
    def build(cls, **kwargs) -> "SolverConfig":
        try:
            return cls(**{k: v for k, v in kwargs.items() if v is not None})
        except ValidationError as e:
            raise SolverConfigurationError(str(e), details=e.errors()) from e

    @classmethod
    def with_margin(
        cls,
        algorithm: Algorithm,
        n: int,
        margin: Optional[float] = None,
        **kwargs,
    ) -> "SolverConfig":
        """
        Config whose iteration cap is ten times the theoretical bound.

        Without a known margin the cap stays at `conf.MAX_ITERATIONS`.
        """
        config = cls.build(**kwargs)
        if margin is None or margin <= 0:
            return config
        bound = iteration_bound(
            algorithm,
            n,
            margin=margin,
            epsilon=config.dual_epsilon or None,
            gamma=config.gamma,
        )
        return config.model_copy(update={"max_iterations": max(1, BOUND_HEADROOM * bound)})


class IterationRecord(FrozenModel):
    """
    State of a solver before update k.

    `mu` is the smoothing parameter of the running snkp or snkpvn instance. isnkpvn
    restarts snkpvn with mu_0 = 2n in every round, so its records count k across rounds
    while mu follows the schedule of the round-local index. `round` tells the rounds apart.
    """

    k: int
    mu: Optional[float] = None
    loss: Optional[float] = None
    smoothed_loss: Optional[float] = None
    p_gnorm: Optional[float] = None
    min_decision: Optional[float] = None
    round: int = 0


class SolveOutcome(FrozenModel):
    kind: OutcomeKind
    algorithm: Algorithm
    iterations: int
    alpha: Optional[np.ndarray] = None
    p: Optional[np.ndarray] = None
    g_norm: Optional[float] = None
    last: Optional[IterationRecord] = None
    trace: List[IterationRecord] = []
    # Raw weight vector and per-point update counts of the classic perceptron
    weights: Optional[np.ndarray] = None
    counts: Optional[np.ndarray] = None

    @field_validator("alpha", "p", "weights", "counts", mode="after")
    @classmethod
    def freeze_array(cls, value: Optional[np.ndarray]) -> Optional[np.ndarray]:
        if value is not None:
            value = np.array(value, dtype=np.float64)
            value.setflags(write=False)
        return value

    @model_validator(mode="after")
    def check_kind(self) -> "SolveOutcome":
        if self.kind is OutcomeKind.PRIMAL and self.alpha is None:
            raise ValueError("a primal outcome carries alpha")
        if self.kind is OutcomeKind.DUAL and (self.p is None or self.g_norm is None):
            raise ValueError("a dual outcome carries p and its G-norm")
        if self.kind is OutcomeKind.LIMIT and self.last is None:
            raise ValueError("a limit outcome carries the last iteration record")
        return self

    @property
    def certificate(self) -> np.ndarray:
        """The vector to check: alpha for primal, p for dual, the last iterate on a limit."""
        if self.kind is OutcomeKind.DUAL:
            return self.p
        if self.alpha is not None:
            return self.alpha
        return self.p
