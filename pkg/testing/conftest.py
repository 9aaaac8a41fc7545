#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import math
from pathlib import Path

import numpy as np
import pytest

from src.app.kernel import GramMatrix, KernelSpec, LabeledDataset, build_gram

SOURCES = Path(__file__).parent / "sources"

# Normalized margin of the two-point instance (0.6, 0.8) +1, (0.8, 0.6) -1
PAIR_MARGIN = math.sqrt(0.02)


@pytest.fixture
def sources() -> Path:
    return SOURCES


@pytest.fixture
def pair_data() -> LabeledDataset:
    return LabeledDataset(points=[[0.6, 0.8], [0.8, 0.6]], labels=[1, -1])


@pytest.fixture
def pair_gram(pair_data) -> GramMatrix:
    return build_gram(pair_data, KernelSpec.linear())


@pytest.fixture
def witness_gram() -> GramMatrix:
    return GramMatrix(entries=[[1.0, -1.0], [-1.0, 1.0]])


@pytest.fixture
def unit_gram() -> GramMatrix:
    return GramMatrix(entries=[[1.0]])


def random_gram(rng: np.random.Generator, n: int, d: int = 3) -> GramMatrix:
    """Gram matrix of random points with random labels under an rbf or linear kernel."""
    data = LabeledDataset(
        points=rng.standard_normal((n, d)), labels=rng.choice([-1.0, 1.0], size=n)
    )
    spec = KernelSpec.rbf(1.0) if rng.random() < 0.5 else KernelSpec.linear()
    return build_gram(data, spec)
