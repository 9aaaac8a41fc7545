#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Optional

import numpy as np
from pydantic import field_validator, model_validator

from src.app.utils.models import FrozenModel, as_vector

from .enums import VerdictKind


class CertificateVerdict(FrozenModel):
    kind: VerdictKind
    vector: np.ndarray
    min_decision: float
    g_norm: Optional[float] = None
    reason: Optional[str] = None

    @field_validator("vector", mode="before")
    @classmethod
    def parse_vector(cls, value) -> np.ndarray:
        return as_vector(value, "certificate")

    @model_validator(mode="after")
    def check_kind(self) -> "CertificateVerdict":
        if self.kind is VerdictKind.PRIMAL_FEASIBLE and not self.min_decision > 0.0:
            raise ValueError("a primal verdict needs a strictly positive minimum decision value")
        if self.kind is VerdictKind.DUAL_EPSILON and self.g_norm is None:
            raise ValueError("a dual verdict needs the G-norm of its vector")
        if self.kind is VerdictKind.FAILURE and not self.reason:
            raise ValueError("a failed verdict needs a reason")
        return self

    @property
    def certified(self) -> bool:
        return self.kind is not VerdictKind.FAILURE

    def __str__(self) -> str:
        match self.kind:
            case VerdictKind.PRIMAL_FEASIBLE:
                return f"primal_feasible(min_decision={self.min_decision:.6g})"
            case VerdictKind.DUAL_EPSILON:
                return f"dual_epsilon(g_norm={self.g_norm:.6g})"
            case _:
                return f"failure({self.reason})"
