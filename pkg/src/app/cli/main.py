#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import sys
from typing import List, Optional

from src.app.solvers import SolverConfigurationError
from src.app.utils.exceptions import KernelFeasibilityError
from src.app.utils.log import setup_logger

from .enums import ExitStatus
from .exceptions import MissingInputError, UsageError
from .models import BenchReport
from .parser import parse_request
from .runner import run

logger = setup_logger("kfeas")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Command line entry point.

    The result goes to stdout as one JSON object, the summary and any error to stderr.

    Returns:
        int: 0 primal, 1 dual, 2 iteration limit, 64 usage, 65 bad input data,
            66 missing input file, 70 internal error.
    """
    try:
        request = parse_request(argv)
        result = run(request)
    except (UsageError, SolverConfigurationError) as e:
        logger.error(f"usage: {e}")
        return ExitStatus.USAGE
    except MissingInputError as e:
        logger.error(str(e))
        return ExitStatus.NO_INPUT
    except KernelFeasibilityError as e:
        logger.error(f"{e.__class__.__name__}: {e}")
        return ExitStatus.DATA
    except Exception:
        logger.exception("Unexpected error")
        return ExitStatus.INTERNAL

    sys.stdout.write(result.to_json() + "\n")
    sys.stdout.flush()

    if isinstance(result, BenchReport):
        for entry in result.results:
            logger.info(f"{entry.algorithm}: {entry.outcome_kind} after {entry.iterations} iterations")
    else:
        logger.info(
            f"{request.command} {result.algorithm}: {result.outcome_kind} after {result.iterations} "
            f"iterations, ||certificate||_G = {result.certificate_gnorm:.6g}, "
            f"min decision = {result.min_decision:.6g}, {result.wall_time_ms:.1f} ms"
        )
    return result.exit_status
