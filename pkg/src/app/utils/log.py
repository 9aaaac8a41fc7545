#!/usr/bin/env python3
# Copyright (C) 2025-present The kfeas authors - License: GNU General Public License v3
# This file is part of the kfeas kernel feasibility toolkit. It is subject to the terms and
# conditions defined in the file LICENSE or at <https://www.gnu.org/licenses/>.

import logging
import logging.config
import os
from typing import Any, Dict

from src.conf import LOG_LEVEL, LOG_PATH

LOG_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s] - %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


class ColorFormatter(logging.Formatter):
    COLORS = {
        "DEBUG": "\033[94m",  # Blue
        "INFO": "\033[0;32m",  # Green
        "WARNING": "\033[93m",  # Yellow
        "ERROR": "\033[91m",  # Red
        "CRITICAL": "\033[1;31m",  # Bold Red
        "RESET": "\033[0m",
    }

    def format(self, record):
        color = self.COLORS.get(record.levelname, self.COLORS["RESET"])
        reset = self.COLORS["RESET"]
        original_format = self._style._fmt
        self._style._fmt = f"{color}{original_format}{reset}"
        formatted = super().format(record)
        self._style._fmt = original_format
        return formatted


def build_log_config(level: int, log_path: str) -> Dict[str, Any]:
    """
    Build the dictConfig used by every logger of the toolkit.

    The console handler writes to stderr: stdout carries the JSON results of the CLI.

    Args:
        level (int): Root log level.
        log_path (str): Directory for a plain log file, or "" for console only.

    Returns:
        Dict[str, Any]: A `logging.config.dictConfig` compatible mapping.
    """
    handlers: Dict[str, Dict[str, Any]] = {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "default",  # Replaced by ColorFormatter in setup_logger
        },
    }
    if log_path:
        handlers["file"] = {
            "class": "logging.FileHandler",
            "filename": f"{log_path}/kfeas-{logging.getLevelName(level)}.log",
            "mode": "a",
            "formatter": "file",
        }

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {"format": LOG_FORMAT, "datefmt": LOG_DATEFMT},
            "file": {"format": LOG_FORMAT, "datefmt": LOG_DATEFMT},
        },
        "handlers": handlers,
        "root": {
            "handlers": list(handlers),
            "level": level,
        },
    }


LOG_CONFIG = build_log_config(LOG_LEVEL, LOG_PATH)

_configured = False


def setup_logger(name: str) -> logging.Logger:
    global _configured
    if not _configured:
        if LOG_PATH and not os.path.exists(LOG_PATH):
            os.makedirs(LOG_PATH)
        logging.config.dictConfig(LOG_CONFIG)

        for handler in logging.getLogger().handlers:
            # Color only the console, never the file
            if isinstance(handler, logging.StreamHandler) and not isinstance(
                handler, logging.FileHandler
            ):
                handler.setFormatter(ColorFormatter(LOG_FORMAT, LOG_DATEFMT))
        _configured = True

    return logging.getLogger(name)
