#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from .enums import Command, ExitStatus
from .exceptions import DatasetParseError, MissingInputError, UsageError
from .io import format_record, load_dataset, load_gram, read_trace, write_trace
from .main import main
from .models import BenchReport, RunRequest, RunResult
from .parser import build_parser, parse_request
from .runner import run
from .synthetic import make_infeasible, make_planar, make_separable, make_thin_slab

__all__ = [
    "Command",
    "ExitStatus",
    "RunRequest",
    "RunResult",
    "BenchReport",
    "load_dataset",
    "load_gram",
    "format_record",
    "write_trace",
    "read_trace",
    "build_parser",
    "parse_request",
    "run",
    "main",
    "make_separable",
    "make_infeasible",
    "make_planar",
    "make_thin_slab",
    "DatasetParseError",
    "MissingInputError",
    "UsageError",
]
