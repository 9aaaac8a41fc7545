#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import argparse
from pathlib import Path
from typing import List, NoReturn, Optional

import src.conf as conf
from src.app.kernel import KernelKind, KernelValidationError
from src.app.solvers import Algorithm, SolverConfig

from .enums import Command
from .exceptions import UsageError
from .models import RunRequest


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--data", type=Path, help="headerless CSV: label, then features")
    common.add_argument(
        "--kernel", choices=[str(kind) for kind in KernelKind], default=str(KernelKind.LINEAR)
    )
    common.add_argument("--degree", type=int, default=2, help="polynomial degree")
    common.add_argument("--offset", type=float, default=0.0, help="polynomial offset")
    common.add_argument("--bandwidth", type=float, default=1.0, help="rbf bandwidth sigma")
    common.add_argument("--gram", type=Path, help="raw n x n kernel matrix for --kernel precomputed")
    common.add_argument(
        "--algorithm", choices=[str(algorithm) for algorithm in Algorithm], default=str(Algorithm.SNKP)
    )
    common.add_argument("--epsilon", type=float, default=conf.EPSILON, help="dual accuracy")
    common.add_argument("--delta", type=float, help="dual threshold of snkpvn")
    common.add_argument("--gamma", type=float, default=conf.GAMMA, help="isnkpvn shrink factor")
    common.add_argument("--max-iter", type=int, default=conf.MAX_ITERATIONS)
    common.add_argument("--trace", type=Path, help="write one JSON record per traced iteration")
    common.add_argument("--trace-every", type=int, default=1)

    parser = ArgumentParser(
        prog="kfeas",
        description="Find a kernel separator or certify (near-)infeasibility.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)
    commands.add_parser(str(Command.SOLVE), parents=[common], help="run one algorithm")
    commands.add_parser(str(Command.CERTIFY), parents=[common], help="run isnkpvn with --epsilon")
    commands.add_parser(str(Command.MARGIN), parents=[common], help="reference margin")
    bench = commands.add_parser(str(Command.BENCH), parents=[common], help="race all algorithms")
    bench.add_argument("--seed", type=int, help="seed of the synthetic instance")
    return parser


def parse_request(argv: Optional[List[str]] = None) -> RunRequest:
    """
    Turn command line arguments into a validated request.

    Raises:
        UsageError: On unknown options, bad values or invalid combinations.
        SolverConfigurationError: On out-of-range solver parameters.
    """
    args = build_parser().parse_args(argv)
    trace_every = args.trace_every if args.trace is not None else 0
    config = SolverConfig.build(
        max_iterations=args.max_iter,
        dual_epsilon=args.epsilon,
        gamma=args.gamma,
        trace_every=trace_every,
    )
    request = RunRequest(
        command=Command(args.command),
        data_path=args.data,
        kernel=KernelKind(args.kernel),
        degree=args.degree,
        offset=args.offset,
        bandwidth=args.bandwidth,
        gram_path=args.gram,
        algorithm=Algorithm(args.algorithm),
        config=config,
        trace_path=args.trace,
        delta=args.delta,
        seed=getattr(args, "seed", None),
    )
    if request.kernel is not KernelKind.PRECOMPUTED:
        try:
            request.kernel_spec()
        except KernelValidationError as e:
            raise UsageError(str(e)) from e
    if args.trace is not None and args.trace_every < 1:
        raise UsageError("--trace-every must be >= 1 when --trace is given")
    return request
