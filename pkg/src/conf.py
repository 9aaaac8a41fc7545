#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import logging
import os

from dotenv import load_dotenv

load_dotenv()


def _read_int(key: str, default: int) -> int:
    raw = os.getenv(key)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise RuntimeError(f"{key} must be an integer, got {raw!r}") from e


def _read_float(key: str, default: float) -> float:
    raw = os.getenv(key)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError as e:
        raise RuntimeError(f"{key} must be a number, got {raw!r}") from e


def _read_level(key: str, default: str) -> int:
    raw = os.getenv(key, default).upper()
    level = logging.getLevelName(raw)
    if not isinstance(level, int):
        raise RuntimeError(f"{key} is not a valid log level: {raw!r}")
    return level


# Logging
LOG_LEVEL = _read_level("KFEAS_LOG_LEVEL", "INFO")
LOG_PATH = os.getenv("KFEAS_LOG_PATH", "")

# Solvers
MAX_ITERATIONS = _read_int("KFEAS_MAX_ITERATIONS", 1_000_000)
GAMMA = _read_float("KFEAS_GAMMA", 2.0)
EPSILON = _read_float("KFEAS_EPSILON", 1e-6)
REFRESH_INTERVAL = _read_int("KFEAS_REFRESH_INTERVAL", 1000)

# Numerical tolerances
SYMMETRY_TOLERANCE = _read_float("KFEAS_SYMMETRY_TOLERANCE", 1e-9)
TIE_TOLERANCE = _read_float("KFEAS_TIE_TOLERANCE", 1e-12)

# Oracle
ORACLE_MAX_ITERATIONS = _read_int("KFEAS_ORACLE_MAX_ITERATIONS", 1_000_000)

if MAX_ITERATIONS < 1:
    raise RuntimeError("KFEAS_MAX_ITERATIONS must be at least 1.")
if GAMMA <= 1:
    raise RuntimeError("KFEAS_GAMMA must be greater than 1.")
if REFRESH_INTERVAL < 1:
    raise RuntimeError("KFEAS_REFRESH_INTERVAL must be at least 1.")
