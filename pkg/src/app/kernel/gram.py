#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from typing import Optional

import numpy as np
from sklearn.metrics.pairwise import pairwise_kernels

from src.app.utils.log import setup_logger
from src.app.utils.models import as_vector

from .enums import KernelKind
from .exceptions import (
    DegeneratePointError,
    DimensionMismatchError,
    UnsupportedOperationError,
)
from .models import CoefficientVector, GramMatrix, KernelSpec, LabeledDataset, validate_raw_kernel

logger = setup_logger(__name__)


def kernel_matrix(spec: KernelSpec, X: np.ndarray, Y: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Evaluate the kernel on every pair of rows of X and Y.

    Args:
        spec (KernelSpec): Kernel to evaluate; must not be precomputed.
        X (np.ndarray): Left points, shape (n, d).
        Y (np.ndarray, optional): Right points, shape (m, d). Defaults to X.

    Returns:
        np.ndarray: The (n, m) matrix K(x_i, y_j).

    Raises:
        UnsupportedOperationError: For a precomputed kernel.
        DimensionMismatchError: If X and Y have a different number of features.
    """
    if Y is not None and X.shape[1] != Y.shape[1]:
        raise DimensionMismatchError(f"points have dimension {X.shape[1]} and {Y.shape[1]}")

    match spec.kind:
        case KernelKind.LINEAR:
            return pairwise_kernels(X, Y, metric="linear")
        case KernelKind.POLYNOMIAL:
            return pairwise_kernels(
                X, Y, metric="polynomial", degree=spec.degree, gamma=1.0, coef0=spec.offset
            )
        case KernelKind.RBF:
            return pairwise_kernels(X, Y, metric="rbf", gamma=1.0 / (2.0 * spec.bandwidth**2))
        case _:
            raise UnsupportedOperationError(
                "a precomputed kernel is only defined on the training indices"
            )


def kernel_diagonal(spec: KernelSpec, X: np.ndarray) -> np.ndarray:
    """K(x_i, x_i) for every row, without building the full matrix."""
    match spec.kind:
        case KernelKind.LINEAR:
            return np.einsum("ij,ij->i", X, X)
        case KernelKind.POLYNOMIAL:
            return (np.einsum("ij,ij->i", X, X) + spec.offset) ** spec.degree
        case KernelKind.RBF:
            return np.ones(X.shape[0])
        case _:
            return np.diag(spec.matrix).copy()


def evaluate_kernel(spec: KernelSpec, u, v) -> float:
    u = as_vector(u, "u")
    v = as_vector(v, "v")
    if u.shape != v.shape:
        raise DimensionMismatchError(
            f"u has dimension {u.shape[0]}, v has dimension {v.shape[0]}",
            details={"u": u.shape[0], "v": v.shape[0]},
        )
    return float(kernel_matrix(spec, u[None, :], v[None, :])[0, 0])


def normalize_signed(K: np.ndarray, labels: np.ndarray) -> GramMatrix:
    """
    Turn a raw kernel matrix into the normalized signed Gram matrix.

    Only the upper triangle of the scaled matrix is kept and mirrored, and the
    diagonal is set to exactly 1.

    Args:
        K (np.ndarray): Raw kernel values, n x n.
        labels (np.ndarray): Labels in {-1, +1}, length n.

    Returns:
        GramMatrix: The normalized signed Gram matrix.

    Raises:
        DimensionMismatchError: If K and labels disagree in size.
        KernelValidationError: If K is not symmetric or not a valid kernel matrix.
        DegeneratePointError: If some K_ii <= 0.
    """
    K = validate_raw_kernel(K)
    labels = np.asarray(labels, dtype=np.float64)
    if K.shape[0] != labels.shape[0]:
        raise DimensionMismatchError(
            f"kernel matrix is {K.shape[0]}x{K.shape[0]} but there are {labels.shape[0]} labels"
        )

    diagonal = np.diag(K)
    scaled = np.outer(labels, labels) * K / np.sqrt(np.outer(diagonal, diagonal))
    upper = np.triu(scaled, k=1)
    entries = upper + upper.T
    np.fill_diagonal(entries, 1.0)
    return GramMatrix(entries=entries)


def build_gram(data: LabeledDataset, spec: KernelSpec) -> GramMatrix:
    """
    Build G for a dataset under a kernel.

    Args:
        data (LabeledDataset): Training points and labels.
        spec (KernelSpec): Kernel; a precomputed spec must match the dataset size.

    Returns:
        GramMatrix: The normalized signed Gram matrix.

    Raises:
        DegeneratePointError: If K(x_i, x_i) <= 0 for some i.
        KernelValidationError: If a precomputed matrix is invalid.
    """
    if spec.kind is KernelKind.PRECOMPUTED:
        K = spec.matrix
    else:
        K = kernel_matrix(spec, data.points)
        diagonal = kernel_diagonal(spec, data.points)
        bad = np.flatnonzero(diagonal <= 0)
        if bad.size:
            raise DegeneratePointError(int(bad[0]), float(diagonal[bad[0]]))
    gram = normalize_signed(K, data.labels)
    logger.debug(f"Built {gram.size}x{gram.size} Gram matrix with kernel {spec}")
    return gram


def g_inner(G: GramMatrix, a, b) -> float:
    a = G._check(a, "a")
    return float(a @ G.matvec(b))


def g_norm(G: GramMatrix, a) -> float:
    a = G._check(a, "a")
    return float(np.sqrt(max(a @ (G.entries @ a), 0.0)))


def decision_values(G: GramMatrix, alpha: CoefficientVector) -> np.ndarray:
    return G.matvec(alpha)


def predict(data: LabeledDataset, spec: KernelSpec, alpha: CoefficientVector, x) -> float:
    """
    Evaluate f_alpha(x) = sum_i alpha_i y_i K(x_i, x) / sqrt(K(x_i, x_i)).

    Raises:
        UnsupportedOperationError: For a precomputed kernel.
        DimensionMismatchError: If x or alpha do not fit the dataset.
    """
    if spec.kind is KernelKind.PRECOMPUTED:
        raise UnsupportedOperationError("predict needs a kernel that can be evaluated on new points")
    alpha = as_vector(alpha, "alpha")
    if alpha.shape[0] != data.n:
        raise DimensionMismatchError(f"alpha has length {alpha.shape[0]}, expected {data.n}")
    x = as_vector(x, "x")
    if x.shape[0] != data.d:
        raise DimensionMismatchError(f"x has dimension {x.shape[0]}, expected {data.d}")

    column = kernel_matrix(spec, data.points, x[None, :])[:, 0]
    diagonal = kernel_diagonal(spec, data.points)
    bad = np.flatnonzero(diagonal <= 0)
    if bad.size:
        raise DegeneratePointError(int(bad[0]), float(diagonal[bad[0]]))
    return float(np.sum(alpha * data.labels * column / np.sqrt(diagonal)))
