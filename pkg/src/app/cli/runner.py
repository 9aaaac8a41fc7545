#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import time
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np

from src.app.kernel import GramMatrix, KernelKind, LabeledDataset, build_gram, g_norm
from src.app.oracle import reference_min_gnorm
from src.app.solvers import Algorithm, SolveOutcome, run_solver
from src.app.utils.log import setup_logger

from .enums import Command, ExitStatus
from .io import load_dataset, load_gram, write_trace
from .models import BenchReport, RunRequest, RunResult
from .synthetic import make_separable

logger = setup_logger(__name__)

BENCH_ORDER = (
    Algorithm.PERCEPTRON,
    Algorithm.NORMALIZED_PERCEPTRON,
    Algorithm.NKP,
    Algorithm.SNKP,
    Algorithm.NVN,
    Algorithm.SNKPVN,
    Algorithm.ISNKPVN,
)
BENCH_SIZE = 32
BENCH_DIMENSION = 3
BENCH_MARGIN = 0.1


def _instance(request: RunRequest) -> Tuple[LabeledDataset, GramMatrix]:
    if request.data_path is None:
        seed = 0 if request.seed is None else request.seed
        data = make_separable(seed, n=BENCH_SIZE, d=BENCH_DIMENSION, margin=BENCH_MARGIN)
        logger.info(f"Generated a separable instance with n={data.n}, d={data.d}, seed={seed}")
    else:
        data = load_dataset(request.data_path)

    if request.kernel is KernelKind.PRECOMPUTED:
        G = load_gram(request.gram_path, data.labels)
    else:
        G = build_gram(data, request.kernel_spec())
    return data, G


def _result(outcome: SolveOutcome, G: GramMatrix, started: float) -> RunResult:
    certificate = outcome.certificate
    return RunResult(
        outcome_kind=str(outcome.kind),
        algorithm=str(outcome.algorithm),
        iterations=outcome.iterations,
        certificate=certificate.tolist(),
        certificate_gnorm=g_norm(G, certificate),
        min_decision=float(np.min(G.matvec(certificate))),
        wall_time_ms=(time.perf_counter() - started) * 1000.0,
        exit_status=outcome.kind.exit_status,
    )


def _trace_file(path: Path, algorithm: Algorithm) -> Path:
    return path.with_name(f"{path.stem}.{algorithm}{path.suffix}")


def _solve(
    algorithm: Algorithm,
    request: RunRequest,
    data: LabeledDataset,
    G: GramMatrix,
    trace_path: Optional[Path],
) -> RunResult:
    started = time.perf_counter()
    outcome = run_solver(
        algorithm,
        request.config,
        data=data,
        G=G,
        delta=request.delta if request.delta is not None else request.config.dual_epsilon,
    )
    result = _result(outcome, G, started)
    if trace_path is not None:
        write_trace(trace_path, outcome.trace)
    return result


def _margin(request: RunRequest, G: GramMatrix) -> RunResult:
    started = time.perf_counter()
    report = reference_min_gnorm(G, request.config.dual_epsilon or 1e-6)
    return RunResult(
        outcome_kind="feasible" if report.feasible else "infeasible",
        algorithm="oracle",
        iterations=report.iterations,
        certificate=report.minimizer.tolist(),
        certificate_gnorm=report.margin_estimate,
        min_decision=float(np.min(G.matvec(report.minimizer))),
        margin_estimate=report.margin_estimate,
        wall_time_ms=(time.perf_counter() - started) * 1000.0,
        exit_status=ExitStatus.PRIMAL if report.feasible else ExitStatus.DUAL,
    )


def run(request: RunRequest) -> Union[RunResult, BenchReport]:
    """
    Execute one command.

    solve runs the requested algorithm, certify runs isnkpvn, margin runs the reference
    oracle and bench runs every applicable algorithm on one instance, in a fixed order.

    Args:
        request (RunRequest): Validated command line.

    Returns:
        Union[RunResult, BenchReport]: The result, carrying its exit status.
    """
    data, G = _instance(request)
    logger.debug(f"{request.command}: n={G.size}, kernel={request.kernel}")

    match request.command:
        case Command.SOLVE:
            return _solve(request.algorithm, request, data, G, request.trace_path)
        case Command.CERTIFY:
            return _solve(Algorithm.ISNKPVN, request, data, G, request.trace_path)
        case Command.MARGIN:
            return _margin(request, G)
        case _:
            results = []
            for algorithm in BENCH_ORDER:
                if algorithm.linear_only and request.kernel is not KernelKind.LINEAR:
                    continue
                trace_path = (
                    _trace_file(request.trace_path, algorithm) if request.trace_path else None
                )
                results.append(_solve(algorithm, request, data, G, trace_path))
            return BenchReport.from_results(results)
