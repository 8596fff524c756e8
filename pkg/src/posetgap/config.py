"""Enumeration caps, overridable through the environment."""

import os

DEFAULT_CHAIN_CAP = 10**6
DEFAULT_ANTICHAIN_CAP = 10**6

CHAIN_CAP_ENV = "POSETGAP_CHAIN_CAP"
ANTICHAIN_CAP_ENV = "POSETGAP_ANTICHAIN_CAP"


def _from_env(var: str, default: int) -> int:
    raw = os.environ.get(var)
    if raw is None or not raw.strip():
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{var} must be positive, got {value}")
    return value


def chain_cap() -> int:
    return _from_env(CHAIN_CAP_ENV, DEFAULT_CHAIN_CAP)


def antichain_cap() -> int:
    return _from_env(ANTICHAIN_CAP_ENV, DEFAULT_ANTICHAIN_CAP)
