#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Optional, TypeAlias

import numpy as np
from pydantic import ValidationError, field_validator, model_validator

import src.conf as conf
from src.app.utils.models import FrozenModel, as_matrix, as_vector

from .enums import KernelKind
from .exceptions import (
    DatasetValidationError,
    DegeneratePointError,
    DimensionMismatchError,
    KernelValidationError,
)

# Finite n-vector of coefficients over the training points.
CoefficientVector: TypeAlias = np.ndarray

CAUCHY_SCHWARZ_SLACK = 1e-12


def validate_raw_kernel(matrix, tolerance: Optional[float] = None) -> np.ndarray:
    """
    Check a raw kernel matrix K before it is normalized.

    Args:
        matrix: Square array-like of kernel values.
        tolerance (float, optional): Absolute entrywise symmetry tolerance,
            defaults to `conf.SYMMETRY_TOLERANCE`.

    Returns:
        np.ndarray: The matrix as a read-only float64 array.

    Raises:
        KernelValidationError: If the matrix is not square or not symmetric.
        DegeneratePointError: If a diagonal entry is not strictly positive.
    """
    tolerance = conf.SYMMETRY_TOLERANCE if tolerance is None else tolerance
    matrix = as_matrix(matrix, "kernel matrix")
    rows, cols = matrix.shape
    if rows != cols or rows == 0:
        raise KernelValidationError(
            f"kernel matrix must be square and non-empty, got shape {matrix.shape}"
        )
    asymmetry = float(np.max(np.abs(matrix - matrix.T)))
    if asymmetry > tolerance:
        raise KernelValidationError(
            f"kernel matrix is not symmetric: max |K_ij - K_ji| = {asymmetry:.3g} > {tolerance:g}",
            details={"asymmetry": asymmetry},
        )
    diagonal = np.diag(matrix)
    bad = np.flatnonzero(diagonal <= 0)
    if bad.size:
        raise DegeneratePointError(int(bad[0]), float(diagonal[bad[0]]))
    return matrix


class KernelSpec(FrozenModel):
    kind: KernelKind = KernelKind.LINEAR
    degree: int = 2
    offset: float = 0.0
    bandwidth: float = 1.0
    matrix: Optional[np.ndarray] = None

    @field_validator("matrix", mode="before")
    @classmethod
    def parse_matrix(cls, value) -> Optional[np.ndarray]:
        if value is None:
            return None
        return validate_raw_kernel(value)

    @model_validator(mode="after")
    def check_parameters(self) -> "KernelSpec":
        if self.kind is KernelKind.POLYNOMIAL:
            if self.degree < 1:
                raise KernelValidationError(f"polynomial degree must be >= 1, got {self.degree}")
            if self.offset < 0:
                raise KernelValidationError(f"polynomial offset must be >= 0, got {self.offset}")
        elif self.kind is KernelKind.RBF:
            if not self.bandwidth > 0:
                raise KernelValidationError(f"rbf bandwidth must be > 0, got {self.bandwidth}")
        elif self.kind is KernelKind.PRECOMPUTED and self.matrix is None:
            raise KernelValidationError("a precomputed kernel needs its matrix")
        return self

    @classmethod
    def _build(cls, **kwargs) -> "KernelSpec":
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise KernelValidationError(str(e), details=e.errors()) from e

    @classmethod
    def linear(cls) -> "KernelSpec":
        return cls._build(kind=KernelKind.LINEAR)

    @classmethod
    def polynomial(cls, degree: int, offset: float = 0.0) -> "KernelSpec":
        return cls._build(kind=KernelKind.POLYNOMIAL, degree=degree, offset=offset)

    @classmethod
    def rbf(cls, bandwidth: float) -> "KernelSpec":
        return cls._build(kind=KernelKind.RBF, bandwidth=bandwidth)

    @classmethod
    def precomputed(cls, matrix) -> "KernelSpec":
        return cls._build(kind=KernelKind.PRECOMPUTED, matrix=matrix)

    def __str__(self) -> str:
        match self.kind:
            case KernelKind.POLYNOMIAL:
                return f"poly(degree={self.degree}, offset={self.offset:g})"
            case KernelKind.RBF:
                return f"rbf(bandwidth={self.bandwidth:g})"
            case _:
                return str(self.kind)


class LabeledDataset(FrozenModel):
    points: np.ndarray
    labels: np.ndarray

    @field_validator("points", mode="before")
    @classmethod
    def parse_points(cls, value) -> np.ndarray:
        points = as_matrix(value, "points")
        if points.shape[0] < 1 or points.shape[1] < 1:
            raise DatasetValidationError(
                f"a dataset needs at least one point and one feature, got shape {points.shape}"
            )
        return points

    @field_validator("labels", mode="before")
    @classmethod
    def parse_labels(cls, value) -> np.ndarray:
        labels = as_vector(value, "labels")
        bad = np.flatnonzero((labels != 1.0) & (labels != -1.0))
        if bad.size:
            raise DatasetValidationError(
                f"label must be -1 or +1, got {labels[bad[0]]:g} at index {bad[0]}",
                details={"index": int(bad[0])},
            )
        return labels

    @model_validator(mode="after")
    def check_sizes(self) -> "LabeledDataset":
        if self.points.shape[0] != self.labels.shape[0]:
            raise DimensionMismatchError(
                f"{self.points.shape[0]} points but {self.labels.shape[0]} labels"
            )
        return self

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]

    def normalized_points(self) -> np.ndarray:
        """
        Rows scaled to unit l2 norm.

        Raises:
            DegeneratePointError: If a point is the origin.
        """
        norms = np.linalg.norm(self.points, axis=1)
        zero = np.flatnonzero(norms == 0)
        if zero.size:
            raise DegeneratePointError(int(zero[0]), 0.0)
        return self.points / norms[:, None]

    def signed_normalized_points(self) -> np.ndarray:
        """Rows y_i x_i / ||x_i||, the vectors whose convex hull decides linear feasibility."""
        return self.labels[:, None] * self.normalized_points()


class GramMatrix(FrozenModel):
    """Normalized signed Gram matrix G with G_ij = y_i y_j K_ij / sqrt(K_ii K_jj)."""

    entries: np.ndarray

    @field_validator("entries", mode="before")
    @classmethod
    def parse_entries(cls, value) -> np.ndarray:
        entries = as_matrix(value, "Gram matrix")
        rows, cols = entries.shape
        if rows != cols or rows == 0:
            raise KernelValidationError(
                f"Gram matrix must be square and non-empty, got shape {entries.shape}"
            )
        if not np.all(np.diag(entries) == 1.0):
            raise KernelValidationError("Gram matrix must have an exact unit diagonal")
        if not np.array_equal(entries, entries.T):
            raise KernelValidationError("Gram matrix must be exactly symmetric")
        largest = float(np.max(np.abs(entries)))
        if largest > 1.0 + CAUCHY_SCHWARZ_SLACK:
            raise KernelValidationError(
                f"Gram matrix entry {largest!r} exceeds 1 in magnitude; K is not a valid kernel matrix"
            )
        return entries

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def _check(self, vector, name: str) -> np.ndarray:
        vector = np.asarray(vector, dtype=np.float64)
        if vector.shape != (self.size,):
            raise DimensionMismatchError(
                f"{name} has shape {vector.shape}, expected ({self.size},)",
                details={"expected": self.size, "actual": vector.shape},
            )
        return vector

    def matvec(self, vector) -> np.ndarray:
        return self.entries @ self._check(vector, "vector")

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]
