#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import math

import numpy as np

from src.app.kernel import GramMatrix, g_norm
from src.app.prox import ProxFunction, in_simplex, prox_value, smoothed_argmin
from src.app.prox.exceptions import SmoothingParameterError

from .enums import VerdictKind
from .models import CertificateVerdict


def loss_from_decisions(g_alpha: np.ndarray, alpha: np.ndarray) -> float:
    """L(alpha) from an already computed G alpha."""
    return float(-np.min(g_alpha)) + 0.5 * max(float(alpha @ g_alpha), 0.0)


def loss(G: GramMatrix, alpha) -> float:
    """
    Regularized empirical loss L(alpha) = max_i -(G alpha)_i + 1/2 ||alpha||_G^2.

    L(alpha) < 0 implies G alpha > 0, and its minimum is -rho^2 / 2 on feasible instances.
    """
    alpha = np.asarray(alpha, dtype=np.float64)
    return loss_from_decisions(G.matvec(alpha), alpha)


def smoothed_loss_at(
    prox: ProxFunction, g_alpha: np.ndarray, alpha: np.ndarray, mu: float, p: np.ndarray
) -> float:
    """L_mu(alpha) from G alpha and the maximizer p = p_mu(alpha), both already known."""
    return -float(g_alpha @ p) - mu * prox_value(prox, p) + 0.5 * max(float(alpha @ g_alpha), 0.0)


def smoothed_loss_from_decisions(
    prox: ProxFunction, g_alpha: np.ndarray, alpha: np.ndarray, mu: float
) -> float:
    return smoothed_loss_at(prox, g_alpha, alpha, mu, smoothed_argmin(prox, g_alpha, mu))


def smoothed_loss(G: GramMatrix, prox: ProxFunction, alpha, mu: float) -> float:
    """
    Smoothed loss L_mu(alpha), evaluated at the exact maximizer p_mu(alpha).

    Args:
        G (GramMatrix): Normalized signed Gram matrix.
        prox (ProxFunction): Entropy or euclidean prox-function.
        alpha: Coefficient vector.
        mu (float): Smoothing parameter, strictly positive.

    Returns:
        float: -<G alpha, p_mu> - mu d(p_mu) + 1/2 ||alpha||_G^2.

    Raises:
        SmoothingParameterError: If mu <= 0.
    """
    if not mu > 0:
        raise SmoothingParameterError(mu)
    alpha = np.asarray(alpha, dtype=np.float64)
    return smoothed_loss_from_decisions(prox, G.matvec(alpha), alpha, mu)


def margin_lower_bound(G: GramMatrix, p) -> float:
    """||p||_G, an upper bound on the margin for every p in the simplex."""
    return g_norm(G, p)


def check_certificate(G: GramMatrix, vector, epsilon: float) -> CertificateVerdict:
    """
    Decide which side of the alternative a vector certifies.

    The primal predicate is checked first. Failure is returned, never raised.

    Args:
        G (GramMatrix): Normalized signed Gram matrix.
        vector: Candidate coefficient vector or distribution.
        epsilon (float): Dual accuracy.

    Returns:
        CertificateVerdict: primal_feasible if min_i (G v)_i > 0, dual_epsilon if v is in
            the simplex with ||v||_G <= epsilon, failure otherwise.
    """
    vector = np.asarray(vector, dtype=np.float64)
    g_vector = G.matvec(vector)
    min_decision = float(np.min(g_vector))

    if min_decision > 0.0:
        return CertificateVerdict(
            kind=VerdictKind.PRIMAL_FEASIBLE, vector=vector, min_decision=min_decision
        )

    norm = math.sqrt(max(float(vector @ g_vector), 0.0))
    if in_simplex(vector):
        if norm <= epsilon:
            return CertificateVerdict(
                kind=VerdictKind.DUAL_EPSILON,
                vector=vector,
                min_decision=min_decision,
                g_norm=norm,
            )
        reason = (
            f"min decision {min_decision:.6g} is not > 0, and ||v||_G = {norm:.6g} "
            f"exceeds epsilon {epsilon:g} by {norm - epsilon:.6g}"
        )
    else:
        reason = (
            f"min decision {min_decision:.6g} is not > 0 (short by {-min_decision:.6g}), "
            f"and the vector is not in the simplex (sum {float(np.sum(vector)):.6g}, "
            f"min entry {float(np.min(vector)):.6g})"
        )
    return CertificateVerdict(
        kind=VerdictKind.FAILURE,
        vector=vector,
        min_decision=min_decision,
        g_norm=norm,
        reason=reason,
    )
