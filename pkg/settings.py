"""Shared configuration for the greedy-drawability toolkit.

    Tunables (tolerances, precision, retry budgets, output location) are read
    from environment variables first, then optionally from Prefect Variables,
    then fall back to the defaults in CONFIG below.

    Prefect lookups are only attempted when GREEDY_PREFECT_LOOKUP=1 so that plain
    library use never needs a reachable Prefect API.

    To test this module run: uv run -m settings
"""

import os

from dotenv import load_dotenv
from prefect.blocks.system import Secret
from prefect.variables import Variable

# Auto-load .env file if present
load_dotenv()


def get_env_or_prefect(
    env_name: str,
    prefect_name: str,
    is_secret: bool = False,
    default: str | None = None,
    use_prefect_only: bool = False,
) -> str | None:
    """Get value from environment variable, fall back to Prefect Block/Variable.

    Args:
        env_name: Environment variable name (e.g., "GREEDY_TOLERANCE")
        prefect_name: Prefect Block/Variable name (e.g., "greedy_tolerance")
        is_secret: If True, use Prefect Secret block; if False, use Variable
        default: Default value if not found in env or Prefect
        use_prefect_only: If True, skip env vars and only use Prefect

    Returns:
        The value from env, Prefect, or default

    Priority (when use_prefect_only=False):
        1. Environment variable
        2. Prefect Secret (if is_secret=True) or Variable, when GREEDY_PREFECT_LOOKUP=1
        3. Default value
    """
    if not use_prefect_only:
        value = os.getenv(env_name)
        if value:
            return value

    if use_prefect_only or os.getenv("GREEDY_PREFECT_LOOKUP") == "1":
        try:
            if is_secret:
                return Secret.load(prefect_name).get()
            else:
                return Variable.get(prefect_name)
        except Exception:
            pass

    return default


def _float_setting(env_name: str, prefect_name: str, default: float) -> float:
    value = get_env_or_prefect(env_name, prefect_name, default=str(default))
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ValueError(f"{env_name} must be a number, got '{value}'")


def _int_setting(env_name: str, prefect_name: str, default: int) -> int:
    value = get_env_or_prefect(env_name, prefect_name, default=str(default))
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValueError(f"{env_name} must be an integer, got '{value}'")


# ============================================================================
# CONFIGURATION
# ============================================================================

CONFIG = {
    # Greedy verification margin, relative to the drawing diameter
    "greedy_tolerance": _float_setting("GREEDY_TOLERANCE", "greedy_tolerance", 1e-9),
    # mpmath working precision for wheel solving and placement
    "layout_precision_bits": _int_setting("GREEDY_LAYOUT_PRECISION_BITS", "greedy_layout_precision_bits", 128),
    # Target |prod sin(beta) - prod sin(gamma)| for the wheel bisection
    "omega_tolerance": _float_setting("GREEDY_OMEGA_TOLERANCE", "greedy_omega_tolerance", 1e-12),
    # Maximum width of each rigorous sine enclosure
    "sine_width": _float_setting("GREEDY_SINE_WIDTH", "greedy_sine_width", 1e-20),
    # Uniform slack factor applied to every angle request in the subtree layout
    "slack_factor": _float_setting("GREEDY_SLACK_FACTOR", "greedy_slack_factor", 0.9),
    # Verifier-in-the-loop retries (each retry halves slack or scale)
    "max_retries": _int_setting("GREEDY_MAX_RETRIES", "greedy_max_retries", 20),
    # Automatic bisection depth for undecided certification pieces
    "max_split_depth": _int_setting("GREEDY_MAX_SPLIT_DEPTH", "greedy_max_split_depth", 6),
    # Decimal digits tried by sign_of_omega_at before giving up
    "sign_max_digits": _int_setting("GREEDY_SIGN_MAX_DIGITS", "greedy_sign_max_digits", 240),
    "output_dir": get_env_or_prefect("GREEDY_OUTPUT_DIR", "greedy_output_dir", default="output"),
}

# The stored pi enclosure must be at least this tight
PI_WIDTH = 1e-40


if __name__ == "__main__":
    for key, value in CONFIG.items():
        print(f"{key:>24}: {value}")
