#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, model_validator

from src.app.kernel import KernelKind, KernelSpec
from src.app.solvers import Algorithm, SolverConfig
from src.app.utils.models import FrozenModel

from .enums import Command, ExitStatus
from .exceptions import UsageError


class RunRequest(FrozenModel):
    command: Command
    data_path: Optional[Path] = None
    kernel: KernelKind = KernelKind.LINEAR
    degree: int = 2
    offset: float = 0.0
    bandwidth: float = 1.0
    gram_path: Optional[Path] = None
    algorithm: Algorithm = Algorithm.SNKP
    config: SolverConfig = SolverConfig()
    trace_path: Optional[Path] = None
    delta: Optional[float] = None
    seed: Optional[int] = None

    @model_validator(mode="after")
    def check_combination(self) -> "RunRequest":
        if self.command is not Command.BENCH and self.data_path is None:
            raise UsageError(f"{self.command} needs --data")
        if self.kernel is KernelKind.PRECOMPUTED and self.gram_path is None:
            raise UsageError("--kernel precomputed needs --gram")
        if self.kernel is KernelKind.PRECOMPUTED and self.data_path is None:
            raise UsageError("--kernel precomputed needs --data for the labels")
        if self.gram_path is not None and self.kernel is not KernelKind.PRECOMPUTED:
            raise UsageError("--gram is only used with --kernel precomputed")
        if self.seed is not None and self.command is not Command.BENCH:
            raise UsageError("--seed is only used by bench")
        if self.command is Command.SOLVE:
            if self.algorithm.linear_only and self.kernel is not KernelKind.LINEAR:
                raise UsageError(f"{self.algorithm} runs on raw features and needs --kernel linear")
            if self.algorithm is Algorithm.SNKPVN and self.delta is None:
                raise UsageError("snkpvn needs --delta")
        if self.delta is not None and not self.delta > 0:
            raise UsageError(f"--delta must be > 0, got {self.delta}")
        if self.command is Command.CERTIFY and not self.config.dual_epsilon > 0:
            raise UsageError("certify needs --epsilon > 0")
        return self

    def kernel_spec(self, matrix=None) -> KernelSpec:
        match self.kernel:
            case KernelKind.POLYNOMIAL:
                return KernelSpec.polynomial(self.degree, self.offset)
            case KernelKind.RBF:
                return KernelSpec.rbf(self.bandwidth)
            case KernelKind.PRECOMPUTED:
                return KernelSpec.precomputed(matrix)
            case _:
                return KernelSpec.linear()


class RunResult(BaseModel):
    outcome_kind: str
    algorithm: str
    iterations: int
    certificate: List[float]
    certificate_gnorm: Optional[float] = None
    min_decision: Optional[float] = None
    margin_estimate: Optional[float] = None
    wall_time_ms: float
    exit_status: int

    def to_json(self) -> str:
        return self.model_dump_json()

    @classmethod
    def from_json(cls, raw: str) -> "RunResult":
        return cls.model_validate_json(raw)


class BenchReport(BaseModel):
    results: List[RunResult]
    exit_status: int = ExitStatus.PRIMAL.value

    @classmethod
    def from_results(cls, results: List[RunResult]) -> "BenchReport":
        """The worst entry decides the status, a limit outranks a dual certificate."""
        status = max((result.exit_status for result in results), default=ExitStatus.PRIMAL.value)
        return cls(results=results, exit_status=status)

    def to_json(self) -> str:
        return self.model_dump_json()
