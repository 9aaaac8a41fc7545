#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import sys

from src.app import main
from src.app.utils import setup_logger

logger = setup_logger("main")


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.critical("Received a KeyboardInterrupt, exiting")
        sys.exit(130)
