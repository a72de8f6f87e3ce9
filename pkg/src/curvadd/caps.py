"""Enumeration caps.

Several operations enumerate a full field, all hyperplanes, or every
additive map on a field.  Those loops are exact but exponential, so each
one takes an explicit cap and refuses to start when the loop count would
exceed it.  The defaults keep everything interactive on a desktop; the
CURVADD_CAP environment variable overrides both at once for users who
want to push further (or clamp harder).
"""

import os

DEFAULT_FIELD_CAP = 1 << 20
DEFAULT_ORACLE_CAP = 1 << 24

_ENV_VAR = "CURVADD_CAP"


def _env_cap():
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{_ENV_VAR} must be a positive integer, got {raw!r}"
        ) from None
    if value <= 0:
        raise ValueError(f"{_ENV_VAR} must be positive, got {value}")
    return value


def field_cap(cap=None):
    """Effective cap for field / hyperplane / point enumeration."""
    if cap is not None:
        return int(cap)
    env = _env_cap()
    if env is not None:
        return env
    return DEFAULT_FIELD_CAP


def oracle_cap(cap=None):
    """Effective cap for the exhaustive all-maps scan."""
    if cap is not None:
        return int(cap)
    env = _env_cap()
    if env is not None:
        return env
    return DEFAULT_ORACLE_CAP
