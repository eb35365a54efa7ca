"""
Runtime configuration for the AC game toolkit.
"""

from config.settings import Settings, get_settings
from config.logging_setup import configure_logging

__all__ = [
    'Settings',
    'get_settings',
    'configure_logging'
]
