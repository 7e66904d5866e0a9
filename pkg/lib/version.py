# -*- coding: utf-8 -*-
"""
Versione di ruledLab: il contenuto del file VERSION se presente e
sostituito da `git archive`, altrimenti `git describe` sul checkout.
"""

import os
import subprocess
from functools import lru_cache

VERSION_FILE = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "VERSION")
FALLBACK = "0.1.0+unknown"


@lru_cache(maxsize=None)
def get_version():
    return _from_file() or _from_git() or FALLBACK


def _from_file():
    try:
        with open(VERSION_FILE, "r") as f:
            value = f.read().strip()
    except OSError:
        return None
    # segnaposto di export-subst non sostituito
    if not value or value.startswith("$Format"):
        return None
    return value


def _from_git():
    try:
        result = subprocess.run(["git", "describe", "--tags", "--always", "--dirty"],
                                cwd=os.path.dirname(VERSION_FILE), capture_output=True, text=True, timeout=5)
    except (OSError, subprocess.SubprocessError):
        return None
    if result.returncode != 0:
        return None
    return result.stdout.strip() or None
