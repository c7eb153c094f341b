"""Process-wide debug switch.

When enabled, constructors re-check cached type annotations and the
evaluators assert their structural invariants on every step.  Set
``STLC_DEBUG=1`` in the environment or call :func:`set_debug`.
"""

import os

DEBUG = os.environ.get("STLC_DEBUG", "") not in ("", "0")


def set_debug(flag):
    global DEBUG
    old = DEBUG
    DEBUG = bool(flag)
    return old


def debug_enabled():
    return DEBUG
