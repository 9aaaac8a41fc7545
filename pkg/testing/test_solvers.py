#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from src.app.cli import make_infeasible, make_separable, make_thin_slab
from src.app.kernel import KernelSpec, LabeledDataset, build_gram
from src.app.objectives import VerdictKind, check_certificate, loss, smoothed_loss
from src.app.prox import ProxFunction, in_simplex, smoothing_schedule, uniform
from src.app.solvers import (
    Algorithm,
    NormalizedKernelPerceptron,
    OutcomeKind,
    SmoothedKernelPerceptron,
    SolverConfig,
    SolverConfigurationError,
    isnkpvn,
    iteration_bound,
    nkp,
    normalized_perceptron,
    nvn,
    perceptron,
    run_solver,
    snkp,
    snkpvn,
)

from .conftest import PAIR_MARGIN


def _config(**kwargs) -> SolverConfig:
    return SolverConfig.build(**kwargs)


class TestSolverConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"max_iterations": 0},
            {"gamma": 1.0},
            {"dual_epsilon": -1e-3},
            {"trace_every": -1},
            {"refresh_interval": 0},
        ],
    )
    def test_rejects_out_of_range(self, kwargs):
        with pytest.raises(SolverConfigurationError):
            SolverConfig.build(**kwargs)

    def test_build_ignores_missing_values(self):
        assert SolverConfig.build(max_iterations=None, gamma=3.0).gamma == 3.0

    def test_with_margin(self):
        config = SolverConfig.with_margin(Algorithm.SNKP, 2, margin=PAIR_MARGIN)
        assert config.max_iterations == 170

    def test_with_unknown_margin(self):
        assert SolverConfig.with_margin(Algorithm.SNKP, 2).max_iterations == SolverConfig().max_iterations


class TestIterationBound:
    def test_values(self):
        assert iteration_bound(Algorithm.SNKP, 2, margin=PAIR_MARGIN) == 17
        assert iteration_bound(Algorithm.SNKPVN, 2, margin=PAIR_MARGIN) == 29
        assert iteration_bound(Algorithm.NKP, 5, margin=0.5) == 4
        assert iteration_bound(Algorithm.NORMALIZED_PERCEPTRON, 5, margin=0.5) == 4
        assert iteration_bound(Algorithm.PERCEPTRON, 5, margin=0.5, radius=2.0) == 16
        assert iteration_bound(Algorithm.NVN, 5, epsilon=0.5) == 4
        assert iteration_bound(Algorithm.ISNKPVN, 2, margin=0.5) == 16

    def test_missing_margin(self):
        with pytest.raises(SolverConfigurationError):
            iteration_bound(Algorithm.SNKP, 4)
        with pytest.raises(SolverConfigurationError):
            iteration_bound(Algorithm.NVN, 4)


class TestPerceptron:
    def test_single_point(self):
        data = LabeledDataset(points=[[1.0, 0.0]], labels=[1])
        outcome = perceptron(data, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations == 1
        assert_array_equal(outcome.weights, [1.0, 0.0])

    def test_antipodal_same_label(self):
        data = LabeledDataset(points=[[1.0, 0.0], [-1.0, 0.0]], labels=[1, 1])
        outcome = perceptron(data, _config(max_iterations=50))
        assert outcome.kind is OutcomeKind.LIMIT
        assert outcome.iterations == 50
        assert outcome.last is not None

    def test_unnormalized_pair(self):
        data = LabeledDataset(points=[[1.2, 1.6], [1.6, 1.2]], labels=[1, -1])
        outcome = perceptron(data, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations <= 800
        G = build_gram(data, KernelSpec.linear())
        assert check_certificate(G, outcome.alpha, 1e-6).kind is VerdictKind.PRIMAL_FEASIBLE

    def test_normalized(self, pair_data):
        outcome = normalized_perceptron(pair_data, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations <= 50
        assert_allclose(outcome.alpha.sum(), 1.0)

    def test_normalized_identical_opposite(self):
        data = LabeledDataset(points=[[1.0, 0.0], [1.0, 0.0]], labels=[1, -1])
        outcome = normalized_perceptron(data, _config(max_iterations=30))
        assert outcome.kind is OutcomeKind.LIMIT


class TestNKP:
    def test_single_point(self, unit_gram):
        outcome = nkp(unit_gram, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations == 1

    def test_pair(self, pair_gram):
        outcome = nkp(pair_gram, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations <= 50
        assert in_simplex(outcome.alpha, 1e-10)

    def test_witness(self, witness_gram):
        outcome = nkp(witness_gram, _config(max_iterations=40))
        assert outcome.kind is OutcomeKind.LIMIT
        assert outcome.iterations == 40


class TestSNKP:
    def test_single_point(self, unit_gram):
        outcome = snkp(unit_gram, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations == 0

    def test_pair(self, pair_gram):
        outcome = snkp(pair_gram, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations <= 17

    def test_witness(self, witness_gram):
        outcome = snkp(witness_gram, _config(max_iterations=200, trace_every=1))
        assert outcome.kind is OutcomeKind.LIMIT
        assert len(outcome.trace) == 200
        for record in outcome.trace:
            assert 0.5 * record.p_gnorm**2 <= record.mu * math.log(2) + 1e-8

    def test_smoothing_follows_closed_form(self):
        G = build_gram(make_infeasible(3, n=6), KernelSpec.linear())
        outcome = snkp(G, _config(max_iterations=60, trace_every=1))
        for record in outcome.trace:
            assert record.mu == pytest.approx(smoothing_schedule(1.0, record.k), rel=1e-12)

    def test_trace_cadence(self, witness_gram):
        outcome = snkp(witness_gram, _config(max_iterations=25, trace_every=4))
        assert [record.k for record in outcome.trace] == [0, 4, 8, 12, 16, 20, 24]

    def test_deterministic(self):
        G = build_gram(make_separable(9, n=20, d=3, margin=0.05), KernelSpec.rbf(2.0))
        first = snkp(G, _config(trace_every=1))
        second = snkp(G, _config(trace_every=1))
        assert first.iterations == second.iterations
        assert first.trace == second.trace
        assert_array_equal(first.alpha, second.alpha)


class TestNVN:
    def test_witness(self, witness_gram):
        outcome = nvn(witness_gram, _config(dual_epsilon=1e-3))
        assert outcome.kind is OutcomeKind.DUAL
        assert outcome.iterations == 0
        assert_allclose(outcome.p, [0.5, 0.5])
        assert outcome.g_norm == 0.0

    def test_single_point(self, unit_gram):
        outcome = nvn(unit_gram, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations == 0

    @pytest.mark.parametrize("seed", range(5))
    def test_infeasible(self, seed):
        G = build_gram(make_infeasible(seed, n=10), KernelSpec.linear())
        outcome = nvn(G, _config(dual_epsilon=0.1, max_iterations=100, trace_every=1))
        assert outcome.kind is OutcomeKind.DUAL
        assert check_certificate(G, outcome.p, 0.1).kind is VerdictKind.DUAL_EPSILON
        norms = [record.p_gnorm for record in outcome.trace]
        assert all(b <= a + 1e-12 for a, b in zip(norms, norms[1:]))


class TestSNKPVN:
    def test_witness(self, witness_gram):
        outcome = snkpvn(witness_gram, [0.5, 0.5], 0.1, _config())
        assert outcome.kind is OutcomeKind.DUAL
        assert outcome.iterations == 0

    def test_pair(self, pair_gram):
        outcome = snkpvn(pair_gram, None, 0.05, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations <= 29

    def test_single_point(self, unit_gram):
        outcome = snkpvn(unit_gram, [1.0], 0.5, _config())
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations == 0

    @pytest.mark.parametrize("delta", [0.0, -0.1])
    def test_invalid_delta(self, pair_gram, delta):
        with pytest.raises(SolverConfigurationError):
            snkpvn(pair_gram, None, delta, _config())

    def test_dual_threshold(self):
        G = build_gram(make_infeasible(1, n=8), KernelSpec.linear())
        outcome = snkpvn(G, None, 0.05, _config())
        assert outcome.kind is OutcomeKind.DUAL
        assert outcome.g_norm < 0.05 * (1 + 1e-9)
        assert in_simplex(outcome.p)


class TestISNKPVN:
    def test_pair(self, pair_gram):
        outcome = isnkpvn(pair_gram, _config(dual_epsilon=1e-3))
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations <= iteration_bound(Algorithm.ISNKPVN, 2, margin=PAIR_MARGIN)

    def test_witness(self, witness_gram):
        outcome = isnkpvn(witness_gram, _config(dual_epsilon=1e-6))
        assert outcome.kind is OutcomeKind.DUAL
        assert outcome.iterations == 0
        assert outcome.g_norm == 0.0

    def test_single_point(self, unit_gram):
        outcome = isnkpvn(unit_gram, _config(dual_epsilon=0.5))
        assert outcome.kind is OutcomeKind.PRIMAL
        assert outcome.iterations == 0

    def test_needs_positive_epsilon(self, pair_gram):
        with pytest.raises(SolverConfigurationError):
            isnkpvn(pair_gram, _config(dual_epsilon=0.0))

    @pytest.mark.parametrize("seed", range(3))
    def test_trace_spans_rounds(self, seed):
        G = build_gram(make_infeasible(seed, n=8), KernelSpec.linear())
        outcome = isnkpvn(G, _config(dual_epsilon=1e-3, trace_every=3))
        assert outcome.kind is OutcomeKind.DUAL
        ks = [record.k for record in outcome.trace]
        assert ks == list(range(0, outcome.iterations, 3))

    @pytest.mark.parametrize("seed", range(3))
    def test_smoothing_restarts_each_round(self, seed):
        G = build_gram(make_infeasible(seed, n=8), KernelSpec.linear())
        outcome = isnkpvn(G, _config(dual_epsilon=1e-3, trace_every=1))
        rounds = [record.round for record in outcome.trace]
        assert rounds == sorted(rounds)
        assert rounds[-1] > 0

        start = {}
        for record in outcome.trace:
            start.setdefault(record.round, record.k)
            local = record.k - start[record.round]
            assert record.mu == pytest.approx(smoothing_schedule(G.size, local), rel=1e-12)

    def test_shared_iteration_cap(self):
        G = build_gram(make_thin_slab(0), KernelSpec.linear())
        outcome = isnkpvn(G, _config(dual_epsilon=1e-9, max_iterations=10))
        assert outcome.kind is OutcomeKind.LIMIT
        assert outcome.iterations == 10


class TestCertificates:
    @pytest.mark.parametrize("seed", range(5))
    def test_primal_outcomes_certify(self, seed):
        data = make_separable(seed, n=16, d=3, margin=0.1)
        G = build_gram(data, KernelSpec.linear())
        for algorithm in Algorithm:
            outcome = run_solver(algorithm, _config(dual_epsilon=1e-4), data=data, G=G, delta=1e-4)
            assert outcome.kind is OutcomeKind.PRIMAL, algorithm
            verdict = check_certificate(G, outcome.certificate, 1e-4)
            assert verdict.kind is VerdictKind.PRIMAL_FEASIBLE, algorithm

    @pytest.mark.parametrize("seed", range(5))
    def test_dual_outcomes_certify(self, seed):
        G = build_gram(make_infeasible(seed, n=10), KernelSpec.linear())
        for algorithm in (Algorithm.NVN, Algorithm.ISNKPVN):
            outcome = run_solver(algorithm, _config(dual_epsilon=1e-3), G=G)
            assert outcome.kind is OutcomeKind.DUAL, algorithm
            verdict = check_certificate(G, outcome.p, 1e-3)
            assert verdict.kind is VerdictKind.DUAL_EPSILON, algorithm

    def test_missing_inputs(self, pair_gram, pair_data):
        with pytest.raises(SolverConfigurationError):
            run_solver(Algorithm.PERCEPTRON, _config(), G=pair_gram)
        with pytest.raises(SolverConfigurationError):
            run_solver(Algorithm.SNKP, _config(), data=pair_data)
        with pytest.raises(SolverConfigurationError):
            run_solver(Algorithm.SNKPVN, _config(), G=pair_gram)


def _trajectory(solver) -> list:
    """Run a solver and collect alpha after every update."""
    iterates = []
    step = solver._step

    def recording_step(k: int) -> None:
        step(k)
        iterates.append(np.array(solver.alpha))

    solver._step = recording_step
    solver.solve()
    return iterates


class TestTrajectories:
    @staticmethod
    def _instances():
        yield build_gram(make_separable(0, n=20, d=3, margin=0.02), KernelSpec.linear())
        yield build_gram(make_separable(1, n=12, d=4, margin=0.05), KernelSpec.rbf(0.5))
        yield build_gram(make_infeasible(2, n=10), KernelSpec.linear())
        yield build_gram(make_infeasible(3, n=15, d=3), KernelSpec.polynomial(2, 1.0))

    @staticmethod
    def _solvers(G):
        config = _config(max_iterations=200)
        yield NormalizedKernelPerceptron(G, config)
        yield SmoothedKernelPerceptron(G, ProxFunction.entropy(G.size), config)
        yield SmoothedKernelPerceptron(
            G, ProxFunction.euclidean(uniform(G.size)), config, delta=1e-9, algorithm=Algorithm.SNKPVN
        )

    def test_iterates_stay_in_simplex(self):
        checked = 0
        for G in self._instances():
            for solver in self._solvers(G):
                for alpha in _trajectory(solver):
                    checked += 1
                    assert in_simplex(alpha, 1e-10), solver.algorithm
        assert checked >= 3 * 200

    def test_negative_loss_separates(self, pair_gram):
        seen = 0
        for G in (pair_gram, *self._instances()):
            for solver in self._solvers(G):
                for alpha in _trajectory(solver):
                    if loss(G, alpha) < 0:
                        seen += 1
                        assert np.min(G.matvec(alpha)) > 0, solver.algorithm
        assert seen > 0

    def test_recorded_smoothed_loss_matches_recomputation(self):
        G = build_gram(make_infeasible(2, n=10), KernelSpec.linear())
        for prox in (ProxFunction.entropy(G.size), ProxFunction.euclidean(uniform(G.size))):
            solver = SmoothedKernelPerceptron(G, prox, _config(max_iterations=50, trace_every=1))
            iterates = [np.array(solver.alpha), *_trajectory(solver)]
            assert len(solver.trace) == 50
            for record in solver.trace:
                expected = smoothed_loss(G, prox, iterates[record.k], record.mu)
                assert record.smoothed_loss == pytest.approx(expected, rel=1e-9, abs=1e-10)
