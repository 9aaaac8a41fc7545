#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

from .enums import VerdictKind
from .losses import (
    check_certificate,
    loss,
    loss_from_decisions,
    margin_lower_bound,
    smoothed_loss,
    smoothed_loss_at,
    smoothed_loss_from_decisions,
)
from .models import CertificateVerdict

__all__ = [
    "VerdictKind",
    "CertificateVerdict",
    "loss",
    "loss_from_decisions",
    "smoothed_loss",
    "smoothed_loss_at",
    "smoothed_loss_from_decisions",
    "margin_lower_bound",
    "check_certificate",
]
