"""Environment-driven defaults."""

import os

from dotenv import load_dotenv

from isotype.errors import ConfigError

load_dotenv()

THREADS_ENV = "ISOTYPE_THREADS"


def get_default_threads() -> int:
    """
    Get the default worker count for parallel sweeps.

    Uses ISOTYPE_THREADS environment variable if set, otherwise 1.

    Returns:
        Number of worker processes
    """
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        threads = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    if threads < 1:
        raise ConfigError(f"{THREADS_ENV} must be positive, got {threads}")
    return threads
