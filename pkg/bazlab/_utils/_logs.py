import os
import logging

logger: logging.Logger = logging.getLogger("bazlab")

_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
}


def _basic_config() -> None:
    # e.g. [2026-10-05 14:12:26 - bazlab.lib.coeffs:318 - DEBUG] sweep trial 40/1000 finished
    logging.basicConfig(
        format="[%(asctime)s - %(name)s:%(lineno)d - %(levelname)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def setup_logging() -> None:
    """Switch on the `bazlab` logger when `BAZLAB_LOG` names a level; unknown values are ignored."""
    level = _LEVELS.get(os.environ.get("BAZLAB_LOG", "").strip().lower())
    if level is None:
        return
    _basic_config()
    logger.setLevel(level)
