#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import math
from typing import TypeAlias

import numpy as np
from pydantic import field_validator, model_validator

from src.app.utils.models import FrozenModel, as_vector

from .enums import ProxKind
from .exceptions import SimplexViolationError

# Nonnegative n-vector whose entries sum to 1 within SIMPLEX_TOLERANCE.
SimplexVector: TypeAlias = np.ndarray

SIMPLEX_TOLERANCE = 1e-12


def in_simplex(vector, tolerance: float = SIMPLEX_TOLERANCE) -> bool:
    vector = np.asarray(vector, dtype=np.float64)
    return bool(
        vector.ndim == 1
        and vector.size > 0
        and np.all(np.isfinite(vector))
        and np.all(vector >= 0)
        and abs(float(np.sum(vector)) - 1.0) <= tolerance
    )


def as_simplex(vector, name: str = "p") -> SimplexVector:
    """
    Validate a probability distribution.

    Raises:
        SimplexViolationError: If an entry is negative or the entries do not sum to 1.
    """
    vector = as_vector(vector, name)
    if not in_simplex(vector):
        raise SimplexViolationError(
            f"{name} is not in the simplex: min entry {vector.min() if vector.size else 'n/a'}, "
            f"sum {float(np.sum(vector))!r}"
        )
    return vector


def uniform(n: int) -> SimplexVector:
    vector = np.full(n, 1.0 / n)
    vector.setflags(write=False)
    return vector


class ProxFunction(FrozenModel):
    """
    Strongly convex prox-function d on the simplex with its minimizer `center`.

    Entropy: d(p) = sum_i p_i log p_i + log n, 1-strongly convex in l1, lambda_sharp = 1.
    Euclidean: d_q(p) = 1/2 ||p - q||^2, 1-strongly convex in l2, lambda_sharp = n.
    """

    kind: ProxKind
    center: np.ndarray

    @field_validator("center", mode="before")
    @classmethod
    def parse_center(cls, value) -> np.ndarray:
        return as_simplex(value, "prox center")

    @model_validator(mode="after")
    def check_center(self) -> "ProxFunction":
        if self.kind is ProxKind.ENTROPY and not np.all(self.center == self.center[0]):
            raise SimplexViolationError("the entropy prox is centered at the uniform distribution")
        return self

    @classmethod
    def entropy(cls, n: int) -> "ProxFunction":
        return cls(kind=ProxKind.ENTROPY, center=uniform(n))

    @classmethod
    def euclidean(cls, q) -> "ProxFunction":
        return cls(kind=ProxKind.EUCLIDEAN, center=q)

    @property
    def size(self) -> int:
        return self.center.shape[0]

    @property
    def prox_center(self) -> SimplexVector:
        return self.center

    @property
    def lambda_sharp(self) -> float:
        # ||p||_G^2 <= lambda_sharp ||p||_#^2 for every unit-diagonal PSD G
        return 1.0 if self.kind is ProxKind.ENTROPY else float(self.size)

    @property
    def mu0(self) -> float:
        return 2.0 * self.lambda_sharp

    @property
    def sup_value(self) -> float:
        """Largest value of d over the simplex, attained at a vertex."""
        if self.kind is ProxKind.ENTROPY:
            return math.log(self.size)
        q = self.center
        return 0.5 * (1.0 - 2.0 * float(q.min()) + float(q @ q))

    def strong_convexity_norm(self, vector) -> float:
        vector = np.asarray(vector, dtype=np.float64)
        if self.kind is ProxKind.ENTROPY:
            return float(np.sum(np.abs(vector)))
        return float(np.linalg.norm(vector))
