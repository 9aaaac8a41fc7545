#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import itertools
import math
from typing import Iterator, Optional, Tuple

import numpy as np

import src.conf as conf
from src.app.kernel import GramMatrix, LabeledDataset, g_norm
from src.app.prox import SimplexVector
from src.app.utils.log import setup_logger

from .exceptions import OracleToleranceError, UnsupportedSizeError
from .models import OracleReport

logger = setup_logger(__name__)

EXACT_MAX_SIZE = 3
BRUTE_MAX_SIZE = 12
# Residual accepted from a least-squares KKT solve
KKT_RESIDUAL = 1e-9
ANGLE_SLACK = 1e-12


def _supports(n: int) -> Iterator[Tuple[int, ...]]:
    for size in range(1, n + 1):
        yield from itertools.combinations(range(n), size)


def _exact_min_gnorm(G: GramMatrix) -> Tuple[np.ndarray, int]:
    """Minimize p^T G p by solving the KKT system on every support."""
    n = G.size
    best, best_value, examined = None, math.inf, 0
    for support in _supports(n):
        examined += 1
        index = list(support)
        size = len(index)
        system = np.zeros((size + 1, size + 1))
        system[:size, :size] = G.entries[np.ix_(index, index)]
        system[:size, size] = 1.0
        system[size, :size] = 1.0
        rhs = np.zeros(size + 1)
        rhs[size] = 1.0
        solution = np.linalg.lstsq(system, rhs, rcond=None)[0]
        if np.max(np.abs(system @ solution - rhs)) > KKT_RESIDUAL:
            continue
        weights = solution[:size]
        if np.any(weights < -KKT_RESIDUAL):
            continue
        p = np.zeros(n)
        p[index] = np.maximum(weights, 0.0)
        p /= p.sum()
        value = float(p @ G.matvec(p))
        if value < best_value:
            best, best_value = p, value
    return best, examined


def _pairwise_min_gnorm(
    G: GramMatrix, tolerance: float, max_iterations: int
) -> Tuple[np.ndarray, int]:
    """
    Pairwise conditional gradient on f(p) = p^T G p over the simplex.

    Mass moves from the away vertex a (largest (Gp)_i on the support) to the
    Frank-Wolfe vertex s (smallest (Gp)_i) with an exact line search capped at p_a.
    Stops once the duality gap 2 (p^T G p - (Gp)_s) is at most tolerance^2.
    """
    n = G.size
    p = np.full(n, 1.0 / n)
    g_p = G.matvec(p)
    gap_target = tolerance**2

    iteration = 0
    for iteration in range(max_iterations):
        if iteration and iteration % conf.REFRESH_INTERVAL == 0:
            g_p = G.matvec(p)
        s = int(np.argmin(g_p))
        gap = 2.0 * (float(p @ g_p) - g_p[s])
        if gap <= gap_target:
            break

        support = np.flatnonzero(p > 0)
        a = int(support[np.argmax(g_p[support])])
        curvature = G.entries[s, s] - 2.0 * G.entries[s, a] + G.entries[a, a]
        step_max = p[a]
        if curvature > 0:
            step = min((g_p[a] - g_p[s]) / curvature, step_max)
        else:
            step = step_max
        if step <= 0:
            break

        p[a] = 0.0 if step == step_max else p[a] - step
        p[s] += step
        g_p += step * (G.column(s) - G.column(a))
    else:
        logger.warning(
            f"Conditional gradient hit {max_iterations} iterations before the gap reached {gap_target:g}"
        )
        iteration = max_iterations

    return p / p.sum(), iteration


def reference_min_gnorm(
    G: GramMatrix, tolerance: float, max_iterations: Optional[int] = None
) -> OracleReport:
    """
    Minimum G-norm point of the simplex, the margin of a feasible instance.

    Sizes up to three are solved exactly over all supports; larger ones by pairwise
    conditional gradient certified by its duality gap.

    Args:
        G (GramMatrix): Normalized signed Gram matrix.
        tolerance (float): Accuracy of margin_estimate, also the feasibility threshold.
        max_iterations (int, optional): Cap for the iterative path,
            defaults to `conf.ORACLE_MAX_ITERATIONS`.

    Returns:
        OracleReport: feasible is margin_estimate > tolerance.

    Raises:
        OracleToleranceError: If tolerance is not positive.
    """
    if not tolerance > 0:
        raise OracleToleranceError(f"tolerance must be > 0, got {tolerance!r}")
    max_iterations = conf.ORACLE_MAX_ITERATIONS if max_iterations is None else max_iterations

    if G.size <= EXACT_MAX_SIZE:
        minimizer, iterations = _exact_min_gnorm(G)
    else:
        minimizer, iterations = _pairwise_min_gnorm(G, tolerance, max_iterations)

    margin = g_norm(G, minimizer)
    logger.debug(f"min ||p||_G = {margin:.12g} on n={G.size} after {iterations} iterations")
    return OracleReport(
        feasible=margin > tolerance,
        margin_estimate=margin,
        minimizer=minimizer,
        iterations=iterations,
    )


def brute_projection(v) -> SimplexVector:
    """
    Euclidean projection onto the simplex by trying every support.

    On support S the stationary point is p_S = v_S - tau with
    tau = (sum_S v - 1) / |S|; the nearest nonnegative one is the projection.

    Raises:
        UnsupportedSizeError: For more than 12 entries.
    """
    v = np.asarray(v, dtype=np.float64)
    n = v.shape[0]
    if n > BRUTE_MAX_SIZE:
        raise UnsupportedSizeError(
            f"brute-force projection enumerates 2^n supports, n={n} > {BRUTE_MAX_SIZE}"
        )
    best, best_distance = None, math.inf
    for support in _supports(n):
        index = list(support)
        tau = (v[index].sum() - 1.0) / len(index)
        weights = v[index] - tau
        if np.any(weights < 0):
            continue
        p = np.zeros(n)
        p[index] = weights
        distance = float(np.sum((p - v) ** 2))
        if distance < best_distance:
            best, best_distance = p, distance
    return best


def _largest_angular_gap(data: LabeledDataset) -> float:
    if data.d != 2:
        raise UnsupportedSizeError(f"the angular sweep needs d = 2, got d = {data.d}")
    z = data.signed_normalized_points()
    angles = np.sort(np.arctan2(z[:, 1], z[:, 0]))
    gaps = np.diff(angles)
    wrap = 2.0 * math.pi - (angles[-1] - angles[0])
    return float(max(gaps.max(initial=0.0), wrap))


def exact_feasibility_2d(data: LabeledDataset) -> bool:
    """
    Whether a strict linear separator through the origin exists in 2-D.

    It does iff the directions y_i x_i / ||x_i|| lie in an open half-plane, i.e. iff
    the largest circular gap between their angles exceeds pi.
    """
    return _largest_angular_gap(data) > math.pi + ANGLE_SLACK


def angular_margin_2d(data: LabeledDataset) -> float:
    """|cos(g / 2)| for the largest angular gap g; the margin of a feasible 2-D instance."""
    return abs(math.cos(_largest_angular_gap(data) / 2.0))
