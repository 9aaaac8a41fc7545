#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import numpy as np

from src.app.kernel import LabeledDataset
from src.app.oracle import angular_margin_2d


def _unit_rows(rng: np.random.Generator, n: int, d: int) -> np.ndarray:
    rows = rng.standard_normal((n, d))
    return rows / np.linalg.norm(rows, axis=1)[:, None]


def make_separable(seed: int, n: int = 32, d: int = 3, margin: float = 0.1) -> LabeledDataset:
    """
    Unit-norm points labeled by a random hyperplane through the origin.

    Only points with |w . x| >= margin are kept, so the normalized margin is at least `margin`.
    """
    rng = np.random.default_rng(seed)
    w = _unit_rows(rng, 1, d)[0]
    points = np.empty((0, d))
    while points.shape[0] < n:
        candidates = _unit_rows(rng, 4 * n, d)
        points = np.vstack([points, candidates[np.abs(candidates @ w) >= margin]])
    points = points[:n]
    return LabeledDataset(points=points, labels=np.sign(points @ w))


def make_infeasible(seed: int, n: int = 12, d: int = 2) -> LabeledDataset:
    """
    Points whose signed directions z_i = y_i x_i / ||x_i|| have the origin in their hull.

    n - 1 random directions are completed by -sum(z) / ||sum(z)||, and then random labels
    and radii are applied without changing the directions.
    """
    rng = np.random.default_rng(seed)
    directions = _unit_rows(rng, n - 1, d)
    total = directions.sum(axis=0)
    directions = np.vstack([directions, -total / np.linalg.norm(total)])
    labels = rng.choice([-1.0, 1.0], size=n)
    radii = rng.uniform(0.5, 2.0, size=n)
    return LabeledDataset(points=labels[:, None] * radii[:, None] * directions, labels=labels)


def make_planar(seed: int, n: int, min_margin: float = 0.01) -> LabeledDataset:
    """Random 2-D instance, redrawn until its margin magnitude is at least `min_margin`."""
    rng = np.random.default_rng(seed)
    while True:
        angles = rng.uniform(0.0, 2.0 * np.pi, size=n)
        labels = rng.choice([-1.0, 1.0], size=n)
        radii = rng.uniform(0.5, 2.0, size=n)
        directions = np.column_stack([np.cos(angles), np.sin(angles)])
        data = LabeledDataset(points=labels[:, None] * radii[:, None] * directions, labels=labels)
        if angular_margin_2d(data) >= min_margin:
            return data


def make_thin_slab(
    seed: int, up: int = 2, down: int = 6, low: float = 0.02, high: float = 0.021
) -> LabeledDataset:
    """
    Nearly antipodal 2-D instance with margin about `low`.

    Signed directions are (a_i, 1) for the `up` points and (a_i, -1) for the `down`
    points, with a_i drawn from [low, high]. The separator (1, 0) has margin about a_i.
    """
    rng = np.random.default_rng(seed)
    offsets = rng.uniform(low, high, size=up + down)
    vertical = np.concatenate([np.ones(up), -np.ones(down)])
    directions = np.column_stack([offsets, vertical])
    labels = np.concatenate([np.ones(up), -np.ones(down)])
    return LabeledDataset(points=labels[:, None] * directions, labels=labels)
