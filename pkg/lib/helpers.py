# -*- coding: utf-8 -*-
from fractions import Fraction


def logRecursive(logger, data, indent=2):
    """Logs a nested settings or report structure one key per line."""
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)):
                logger.info("  " * indent + f"{key}:")
                logRecursive(logger, value, indent + 1)
            else:
                logger.info("  " * indent + f"{key}: {_text(value)}")
    elif isinstance(data, list):
        for i, item in enumerate(data):
            if isinstance(item, (dict, list)):
                logger.info("  " * indent + f"[{i}]:")
                logRecursive(logger, item, indent + 1)
            else:
                logger.info("  " * indent + f"[{i}]: {_text(item)}")
    else:
        logger.info("  " * indent + _text(data))


def _text(value):
    if isinstance(value, Fraction):
        return str(value)
    return repr(value) if isinstance(value, str) else str(value)
