#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import csv
import io
import json
import math
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

from src.app.kernel import DimensionMismatchError, GramMatrix, LabeledDataset, normalize_signed
from src.app.solvers import IterationRecord

from .exceptions import DatasetParseError, MissingInputError

TRACE_KEYS = ("k", "mu", "loss", "smoothed_loss", "p_gnorm", "min_decision")


def _read_rows(path: Path) -> List[Tuple[int, List[str]]]:
    """Non-blank CSV rows with their 1-based line numbers."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except FileNotFoundError as e:
        raise MissingInputError(f"no such file: {path}") from e
    except UnicodeDecodeError as e:
        raise DatasetParseError(f"{path} is not valid UTF-8") from e
    except OSError as e:
        raise MissingInputError(f"cannot read {path}: {e.strerror}") from e

    rows = []
    # splitlines accepts both LF and CRLF
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = next(csv.reader(io.StringIO(line)))
        rows.append((number, [field.strip() for field in fields]))
    if not rows:
        raise DatasetParseError(f"{path} holds no data rows")
    return rows


def _parse_number(field: str, line: int) -> float:
    try:
        value = float(field)
    except ValueError:
        raise DatasetParseError(f"non-numeric field {field!r}", line) from None
    if not math.isfinite(value):
        raise DatasetParseError(f"non-finite field {field!r}", line)
    return value


def load_dataset(path) -> LabeledDataset:
    """
    Read a headerless CSV with the label in the first column and features after it.

    Args:
        path: UTF-8 file with or without a BOM, LF or CRLF line endings.

    Returns:
        LabeledDataset: The parsed points and labels.

    Raises:
        MissingInputError: If the file cannot be opened.
        DatasetParseError: On ragged rows, bad labels or non-numeric fields, with the line number.
    """
    labels, points = [], []
    width: Optional[int] = None
    for line, fields in _read_rows(path):
        if len(fields) < 2:
            raise DatasetParseError("a row needs a label and at least one feature", line)
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise DatasetParseError(
                f"expected {width - 1} features, got {len(fields) - 1}", line
            )
        label = _parse_number(fields[0], line)
        if label not in (-1.0, 1.0):
            raise DatasetParseError("label must be -1 or +1", line)
        labels.append(label)
        points.append([_parse_number(field, line) for field in fields[1:]])
    return LabeledDataset(points=np.array(points), labels=np.array(labels))


def load_gram(path, labels) -> GramMatrix:
    """
    Read a raw n x n kernel matrix and normalize it with the labels.

    Raises:
        MissingInputError: If the file cannot be opened.
        DatasetParseError: On ragged rows or non-numeric fields.
        DimensionMismatchError: If the matrix does not match the number of labels.
        KernelValidationError: If the matrix is not symmetric within tolerance.
        DegeneratePointError: If a diagonal entry is not positive.
    """
    labels = np.asarray(labels, dtype=np.float64)
    rows = []
    for line, fields in _read_rows(path):
        if len(fields) != labels.shape[0]:
            raise DimensionMismatchError(
                f"kernel row has {len(fields)} entries, "
                f"the dataset has {labels.shape[0]} points (line {line})"
            )
        rows.append([_parse_number(field, line) for field in fields])
    if len(rows) != labels.shape[0]:
        raise DimensionMismatchError(
            f"kernel matrix has {len(rows)} rows, the dataset has {labels.shape[0]} points"
        )
    return normalize_signed(np.array(rows), labels)


def format_record(record: IterationRecord) -> str:
    """One trace line: keys in fixed order, floats with 17 significant digits, None as null."""
    parts = []
    for key in TRACE_KEYS:
        value = getattr(record, key)
        if value is None:
            text = "null"
        elif isinstance(value, int):
            text = str(value)
        else:
            text = format(value, ".17g")
        parts.append(f'"{key}": {text}')
    return "{" + ", ".join(parts) + "}"


def write_trace(path, records: List[IterationRecord]) -> None:
    with Path(path).open("w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(format_record(record) + "\n")


def read_trace(path) -> List[IterationRecord]:
    records = []
    for line, fields in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not fields.strip():
            continue
        try:
            records.append(IterationRecord(**json.loads(fields)))
        except json.JSONDecodeError as e:
            raise DatasetParseError(f"invalid trace record: {e.msg}", line) from e
    return records
