#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from .cli import main

__all__ = ["main"]
