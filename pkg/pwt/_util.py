"""pwt utility functions

Usage: from . import _util

Environment variables used:
    PWT_LOGGING

SPDX-License-Identifier: Apache-2.0
"""

import json
import logging
import os

_configured = False


def log_check():
    """Initialize logging for the pwt logger hierarchy.

    PWT_LOGGING names a dictConfig JSON file. When it is not set the
    packaged logging.json is used. When it is set to the empty string
    logging is left alone.
    """
    global _configured
    if _configured:
        return logging.getLogger("pwt")

    _configured = True
    logger = logging.getLogger("pwt")

    pwt_logging = os.getenv("PWT_LOGGING")
    if pwt_logging == "":
        return logger

    if pwt_logging is None:
        dirname = os.path.expanduser(__file__)
        dirname = os.path.abspath(dirname)
        dirname = os.path.dirname(dirname)
        pwt_logging = os.path.join(dirname, "logging.json")

    with open(pwt_logging) as file:
        logd = json.load(file)

    from logging.config import dictConfig

    logd["disable_existing_loggers"] = False
    dictConfig(logd)
    return logger


def env_int(name, default):
    """Integer value of environment variable name, or default when
    it is unset or not a number.
    """
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return default


def fmt_real(value):
    """Format a real so that it reads back bit-exact.
    Integral values are written without a decimal point.
    """
    if isinstance(value, int):
        return str(value)

    return format(value, ".17g")


def fmt_fixed(value, places=10):
    """Format a table value with a fixed number of decimals.
    None and NaN are written as an empty field.
    """
    if value is None or value != value:
        return ""

    return f"{value:.{places}f}"
