#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import math
from typing import Optional

import numpy as np
from scipy.special import softmax, xlogy

import src.conf as conf

from .enums import ProxKind
from .exceptions import SmoothingParameterError
from .models import ProxFunction, SimplexVector


def worst_case_distribution(g_alpha, tolerance: Optional[float] = None) -> SimplexVector:
    """
    Uniform distribution over the indices attaining min_i g_i.

    Args:
        g_alpha: Decision values G alpha.
        tolerance (float, optional): Entries within this of the minimum count as tied,
            defaults to `conf.TIE_TOLERANCE`.

    Returns:
        SimplexVector: A minimizer of <g_alpha, p> over the simplex.
    """
    tolerance = conf.TIE_TOLERANCE if tolerance is None else tolerance
    g_alpha = np.asarray(g_alpha, dtype=np.float64)
    tied = g_alpha <= g_alpha.min() + tolerance
    return tied / np.count_nonzero(tied)


def prox_value(prox: ProxFunction, p) -> float:
    p = np.asarray(p, dtype=np.float64)
    if prox.kind is ProxKind.ENTROPY:
        # sum p_i log(n p_i), with 0 log 0 = 0
        return max(float(np.sum(xlogy(p, p * prox.size))), 0.0)
    diff = p - prox.center
    return 0.5 * float(diff @ diff)


def project_simplex(v) -> SimplexVector:
    """
    Euclidean projection onto the probability simplex.

    Sorts v in descending order and finds the threshold tau with
    sum_i max(v_i - tau, 0) = 1.

    Args:
        v: Any finite vector.

    Returns:
        SimplexVector: argmin_{p in simplex} ||p - v||_2.
    """
    v = np.asarray(v, dtype=np.float64)
    u = np.sort(v)[::-1]
    cumulative = np.cumsum(u) - 1.0
    ranks = np.arange(1, v.size + 1)
    support = np.flatnonzero(u - cumulative / ranks > 0)[-1]
    tau = cumulative[support] / (support + 1)
    return np.maximum(v - tau, 0.0)


def smoothed_argmin(prox: ProxFunction, g_alpha, mu: float) -> SimplexVector:
    """
    Minimize <g_alpha, p> + mu * d(p) over the simplex.

    Args:
        prox (ProxFunction): Entropy gives a softmax of -g_alpha / mu, euclidean the
            projection of q - g_alpha / mu.
        g_alpha: Decision values G alpha.
        mu (float): Smoothing parameter, strictly positive.

    Returns:
        SimplexVector: The smoothed minimizer p_mu(alpha), renormalized to sum to 1.

    Raises:
        SmoothingParameterError: If mu <= 0.
    """
    if not mu > 0 or not math.isfinite(mu):
        raise SmoothingParameterError(mu)
    g_alpha = np.asarray(g_alpha, dtype=np.float64)
    if prox.kind is ProxKind.ENTROPY:
        p = softmax(-g_alpha / mu)
    else:
        p = project_simplex(prox.center - g_alpha / mu)
    return p / np.sum(p)


def smoothing_schedule(lambda_sharp: float, k: int) -> float:
    """mu_k = 4 lambda_sharp / ((k + 1)(k + 2)), the closed form of mu_{k+1} = (1 - theta_k) mu_k."""
    return 4.0 * lambda_sharp / ((k + 1) * (k + 2))
