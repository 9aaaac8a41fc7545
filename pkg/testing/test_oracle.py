#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.app.cli import make_infeasible, make_planar
from src.app.kernel import KernelSpec, LabeledDataset, build_gram
from src.app.oracle import (
    OracleToleranceError,
    UnsupportedSizeError,
    angular_margin_2d,
    brute_projection,
    exact_feasibility_2d,
    reference_min_gnorm,
)
from src.app.prox import project_simplex

from .conftest import PAIR_MARGIN


class TestReferenceMinGnorm:
    def test_pair(self, pair_gram):
        report = reference_min_gnorm(pair_gram, 1e-9)
        assert report.feasible
        assert report.margin_estimate == pytest.approx(PAIR_MARGIN, abs=1e-6)
        assert_allclose(report.minimizer, [0.5, 0.5], atol=1e-9)

    def test_witness(self, witness_gram):
        report = reference_min_gnorm(witness_gram, 1e-9)
        assert not report.feasible
        assert report.margin_estimate == pytest.approx(0.0, abs=1e-12)
        assert_allclose(report.minimizer, [0.5, 0.5], atol=1e-12)

    def test_single_point(self, unit_gram):
        report = reference_min_gnorm(unit_gram, 1e-9)
        assert report.feasible
        assert report.margin_estimate == pytest.approx(1.0)

    @pytest.mark.parametrize("tolerance", [0.0, -1e-6])
    def test_invalid_tolerance(self, pair_gram, tolerance):
        with pytest.raises(OracleToleranceError):
            reference_min_gnorm(pair_gram, tolerance)

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_angular_margin(self, seed):
        data = make_planar(seed, n=5 + seed % 6, min_margin=0.01)
        report = reference_min_gnorm(build_gram(data, KernelSpec.linear()), 1e-6)
        assert report.feasible == exact_feasibility_2d(data)
        if report.feasible:
            assert report.margin_estimate == pytest.approx(angular_margin_2d(data), abs=1e-4)

    @pytest.mark.parametrize("seed", range(5))
    def test_infeasible(self, seed):
        G = build_gram(make_infeasible(seed, n=12), KernelSpec.linear())
        report = reference_min_gnorm(G, 1e-6)
        assert not report.feasible
        assert report.margin_estimate <= 1e-6

    @pytest.mark.parametrize("seed", range(20))
    def test_extension_never_increases_margin(self, seed):
        rng = np.random.default_rng(seed)
        points = rng.standard_normal((3, 3))
        labels = rng.choice([-1.0, 1.0], size=3)
        small = LabeledDataset(points=points[:2], labels=labels[:2])
        large = LabeledDataset(points=points, labels=labels)
        before = reference_min_gnorm(build_gram(small, KernelSpec.linear()), 1e-9)
        after = reference_min_gnorm(build_gram(large, KernelSpec.linear()), 1e-9)
        assert after.margin_estimate <= before.margin_estimate + 1e-9

    @pytest.mark.parametrize("seed", range(5))
    def test_extension_on_iterative_path(self, seed):
        rng = np.random.default_rng(100 + seed)
        points = rng.standard_normal((9, 4))
        labels = rng.choice([-1.0, 1.0], size=9)
        small = LabeledDataset(points=points[:8], labels=labels[:8])
        large = LabeledDataset(points=points, labels=labels)
        before = reference_min_gnorm(build_gram(small, KernelSpec.linear()), 1e-6)
        after = reference_min_gnorm(build_gram(large, KernelSpec.linear()), 1e-6)
        assert after.margin_estimate <= before.margin_estimate + 1e-6


class TestBruteProjection:
    def test_examples(self):
        assert_allclose(brute_projection([2.0, 0.0]), [1.0, 0.0])
        assert_allclose(brute_projection([1.2, 0.3, -0.5]), [0.95, 0.05, 0.0], atol=1e-15)

    def test_too_large(self):
        with pytest.raises(UnsupportedSizeError):
            brute_projection(np.zeros(13))

    def test_matches_sorting_projection(self):
        rng = np.random.default_rng(42)
        for _ in range(500):
            n = int(rng.integers(1, 7))
            v = 3.0 * rng.standard_normal(n)
            assert_allclose(project_simplex(v), brute_projection(v), atol=1e-12)


class TestPlanarFeasibility:
    def test_examples(self, pair_data):
        assert exact_feasibility_2d(pair_data)
        assert angular_margin_2d(pair_data) == pytest.approx(PAIR_MARGIN)
        opposite = LabeledDataset(points=[[1.0, 0.0], [1.0, 0.0]], labels=[1, -1])
        assert not exact_feasibility_2d(opposite)
        single = LabeledDataset(points=[[0.0, 3.0]], labels=[-1])
        assert exact_feasibility_2d(single)
        assert angular_margin_2d(single) == pytest.approx(1.0)

    def test_needs_two_dimensions(self):
        data = LabeledDataset(points=[[1.0, 0.0, 0.0]], labels=[1])
        with pytest.raises(UnsupportedSizeError):
            exact_feasibility_2d(data)
