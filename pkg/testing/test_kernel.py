#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from src.app.kernel import (
    DegeneratePointError,
    DimensionMismatchError,
    GramMatrix,
    KernelSpec,
    KernelValidationError,
    LabeledDataset,
    UnsupportedOperationError,
    build_gram,
    decision_values,
    evaluate_kernel,
    g_inner,
    g_norm,
    normalize_signed,
    predict,
)

from .conftest import PAIR_MARGIN, random_gram


class TestEvaluateKernel:
    def test_linear(self):
        assert evaluate_kernel(KernelSpec.linear(), [3, 4], [3, 4]) == pytest.approx(25.0)
        assert evaluate_kernel(KernelSpec.linear(), [0.6, 0.8], [0.8, 0.6]) == pytest.approx(0.96)

    def test_rbf_of_equal_points_is_one(self):
        assert evaluate_kernel(KernelSpec.rbf(0.7), [1.0, -2.0], [1.0, -2.0]) == pytest.approx(1.0)

    def test_polynomial(self):
        spec = KernelSpec.polynomial(2, offset=1.0)
        assert evaluate_kernel(spec, [1.0, 2.0], [3.0, 1.0]) == pytest.approx(36.0)

    @pytest.mark.parametrize("seed", range(5))
    def test_symmetric(self, seed):
        rng = np.random.default_rng(seed)
        u, v = rng.standard_normal(3), rng.standard_normal(3)
        for spec in (KernelSpec.linear(), KernelSpec.rbf(1.3), KernelSpec.polynomial(3, 0.5)):
            assert evaluate_kernel(spec, u, v) == pytest.approx(evaluate_kernel(spec, v, u))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            evaluate_kernel(KernelSpec.linear(), [1.0, 2.0], [1.0, 2.0, 3.0])

    def test_precomputed_cannot_be_evaluated(self):
        spec = KernelSpec.precomputed([[1.0, 0.5], [0.5, 1.0]])
        with pytest.raises(UnsupportedOperationError):
            evaluate_kernel(spec, [1.0], [1.0])


class TestKernelSpec:
    def test_invalid_degree(self):
        with pytest.raises(KernelValidationError):
            KernelSpec.polynomial(0)

    def test_invalid_bandwidth(self):
        with pytest.raises(KernelValidationError):
            KernelSpec.rbf(0.0)

    def test_asymmetric_precomputed(self):
        with pytest.raises(KernelValidationError):
            KernelSpec.precomputed([[1.0, 2.0], [0.5, 1.0]])

    def test_nonpositive_precomputed_diagonal(self):
        with pytest.raises(DegeneratePointError) as info:
            KernelSpec.precomputed([[1.0, 0.0], [0.0, 0.0]])
        assert info.value.index == 1


class TestBuildGram:
    def test_single_point(self):
        data = LabeledDataset(points=[[2.0, 0.0]], labels=[1])
        assert_array_equal(build_gram(data, KernelSpec.linear()).entries, [[1.0]])

    def test_two_point_instance(self, pair_gram):
        assert_allclose(pair_gram.entries, [[1.0, -0.96], [-0.96, 1.0]], atol=1e-15)

    def test_identical_points_with_opposite_labels(self):
        data = LabeledDataset(points=[[1.0, 0.0], [1.0, 0.0]], labels=[1, -1])
        G = build_gram(data, KernelSpec.linear())
        assert_allclose(G.entries, [[1.0, -1.0], [-1.0, 1.0]], rtol=0, atol=1e-15)

    def test_zero_point_is_degenerate(self):
        data = LabeledDataset(points=[[1.0, 0.0], [0.0, 0.0]], labels=[1, 1])
        with pytest.raises(DegeneratePointError) as info:
            build_gram(data, KernelSpec.linear())
        assert info.value.index == 1

    def test_precomputed(self):
        data = LabeledDataset(points=[[0.0], [0.0]], labels=[1, -1])
        G = build_gram(data, KernelSpec.precomputed([[1.0, 0.96], [0.96, 1.0]]))
        assert_allclose(G.entries, [[1.0, -0.96], [-0.96, 1.0]])

    def test_normalize_signed_size_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            normalize_signed(np.eye(3), np.array([1.0, -1.0]))

    def test_rejects_invalid_entries(self):
        with pytest.raises(KernelValidationError):
            GramMatrix(entries=[[1.0, 0.5], [0.4, 1.0]])
        with pytest.raises(KernelValidationError):
            GramMatrix(entries=[[0.9, 0.0], [0.0, 1.0]])

    @pytest.mark.parametrize("seed", range(20))
    def test_structure(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 12))
        data = LabeledDataset(
            points=rng.standard_normal((n, 4)), labels=rng.choice([-1, 1], size=n)
        )
        for spec in (KernelSpec.linear(), KernelSpec.rbf(0.8), KernelSpec.polynomial(3, 1.0)):
            G = build_gram(data, spec).entries
            assert_array_equal(G, G.T)
            assert_array_equal(np.diag(G), np.ones(n))
            assert np.max(np.abs(G)) <= 1.0 + 1e-12
            for _ in range(5):
                v = rng.standard_normal(n)
                assert v @ G @ v >= -1e-8 * (v @ v)

    @pytest.mark.parametrize("seed", range(10))
    def test_linear_on_unit_points(self, seed):
        rng = np.random.default_rng(seed)
        points = rng.standard_normal((6, 3))
        points /= np.linalg.norm(points, axis=1)[:, None]
        labels = rng.choice([-1.0, 1.0], size=6)
        G = build_gram(LabeledDataset(points=points, labels=labels), KernelSpec.linear())
        expected = np.outer(labels, labels) * (points @ points.T)
        np.fill_diagonal(expected, 1.0)
        assert_allclose(G.entries, expected, atol=1e-14)


class TestGArithmetic:
    def test_inner(self, pair_gram):
        assert g_inner(pair_gram, [1, 0], [1, 0]) == pytest.approx(1.0)
        assert g_inner(pair_gram, [0.5, 0.5], [0.5, 0.5]) == pytest.approx(0.02)
        assert g_inner(pair_gram, [0, 0], [0.3, 0.7]) == 0.0

    def test_norm(self, pair_gram, witness_gram):
        assert g_norm(pair_gram, [0, 1]) == pytest.approx(1.0)
        assert g_norm(pair_gram, [0.5, 0.5]) == pytest.approx(PAIR_MARGIN)
        assert g_norm(witness_gram, [0.5, 0.5]) == 0.0

    def test_decision_values(self, pair_gram, witness_gram):
        assert_allclose(decision_values(pair_gram, [0.5, 0.5]), [0.02, 0.02], atol=1e-15)
        assert_array_equal(decision_values(witness_gram, [0.5, 0.5]), [0.0, 0.0])

    def test_dimension_mismatch(self, pair_gram):
        with pytest.raises(DimensionMismatchError):
            g_inner(pair_gram, [1.0, 0.0, 0.0], [1.0, 0.0])
        with pytest.raises(DimensionMismatchError):
            decision_values(pair_gram, [1.0])

    def test_norm_is_bounded_by_l1(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(2, 11))
            G = random_gram(rng, n)
            for _ in range(10):
                alpha = rng.standard_normal(n)
                l1 = np.abs(alpha).sum()
                assert g_norm(G, alpha) <= l1 * (1 + 1e-9) + 1e-9
                assert l1 <= np.sqrt(n) * np.linalg.norm(alpha) + 1e-9

    def test_triangle_inequality(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            n = int(rng.integers(2, 9))
            G = random_gram(rng, n)
            a, b = rng.standard_normal(n), rng.standard_normal(n)
            assert g_norm(G, a + b) <= g_norm(G, a) + g_norm(G, b) + 1e-9


class TestPredict:
    def test_zero_coefficients(self, pair_data):
        assert predict(pair_data, KernelSpec.linear(), [0.0, 0.0], [0.3, -1.0]) == 0.0

    def test_two_point_instance(self, pair_data):
        value = predict(pair_data, KernelSpec.linear(), [0.5, 0.5], [0.6, 0.8])
        assert value == pytest.approx(0.02)

    @pytest.mark.parametrize("seed", range(10))
    def test_reproduces_decision_values(self, seed):
        rng = np.random.default_rng(seed)
        n = 7
        data = LabeledDataset(
            points=rng.standard_normal((n, 3)), labels=rng.choice([-1, 1], size=n)
        )
        alpha = rng.uniform(0.0, 1.0, size=n)
        for spec in (KernelSpec.rbf(1.5), KernelSpec.polynomial(2, 1.0)):
            g = decision_values(build_gram(data, spec), alpha)
            for j in range(n):
                x = data.points[j]
                scaled = data.labels[j] * predict(data, spec, alpha, x)
                scaled /= np.sqrt(evaluate_kernel(spec, x, x))
                assert scaled == pytest.approx(g[j], abs=1e-10)

    def test_precomputed_is_unsupported(self):
        data = LabeledDataset(points=[[0.0], [0.0]], labels=[1, -1])
        spec = KernelSpec.precomputed([[1.0, 0.5], [0.5, 1.0]])
        with pytest.raises(UnsupportedOperationError):
            predict(data, spec, [0.5, 0.5], [0.0])
