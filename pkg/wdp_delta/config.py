"""Configuration and logging setup for the wdp-delta command line.

Configuration is layered the invoke way: defaults below, then ``/etc/wdp_delta.yml``,
``~/.wdp_delta.yml``, ``./wdp_delta.yml``, a file given with ``--config``, then ``WDP_DELTA_*``
environment variables, then task flags.
"""

import logging
import os

from invoke import Config

DEFAULTS = {
    "jobs": 0,
    "debug": False,
    "log_level": "WARNING",
}


def is_truthy(arg):
    """Convert "truthy" strings into Booleans.

    Examples:
        >>> is_truthy('yes')
        True
    Args:
        arg (str): Truthy string (True values are y, yes, t, true, on and 1; false values are n, no,
        f, false, off and 0. Raises ValueError if val is anything else.
    """
    if isinstance(arg, bool):
        return arg

    val = str(arg).lower()
    if val in ("y", "yes", "t", "true", "on", "1"):
        return True
    if val in ("n", "no", "f", "false", "off", "0"):
        return False
    raise ValueError(f"Invalid truthy value: `{arg}`")


class DeltaConfig(Config):
    """Invoke configuration with the ``wdp_delta`` prefix, so ``WDP_DELTA_JOBS`` sets ``jobs``."""

    prefix = "wdp_delta"

    @staticmethod
    def global_defaults():
        """Invoke's own defaults plus the wdp-delta keys."""
        defaults = Config.global_defaults()
        defaults.update(DEFAULTS)
        return defaults


def job_count(config, override=None):
    """Worker count for ``verify``: the flag, else the config, else one per CPU."""
    jobs = int(override if override is not None else config.get("jobs", 0) or 0)
    if jobs < 0:
        raise ValueError(f"jobs must be nonnegative, got {jobs}")
    return jobs or os.cpu_count() or 1


def configure_logging(config):
    """Set up the root handler once per run from ``debug`` and ``log_level``."""
    level = "DEBUG" if is_truthy(config.get("debug", False)) else str(config.get("log_level", "WARNING")).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
    return level
