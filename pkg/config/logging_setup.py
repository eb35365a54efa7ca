"""
Root logger setup for command-line entry points.
Library modules only attach NullHandlers; this is the one place handlers are installed.
"""

import logging
from typing import Optional

from config.settings import get_settings

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """Configure the root logger once, defaulting to the settings log level."""
    level_name = (level or get_settings().log_level).upper()
    numeric = getattr(logging, level_name, None)
    if not isinstance(numeric, int):
        numeric = logging.INFO
    logging.basicConfig(level=numeric, format=LOG_FORMAT, force=True)
