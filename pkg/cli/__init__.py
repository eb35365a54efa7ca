"""
Command-line surface: simulate, compare, stability, verify, calibrate.
"""

__version__ = "0.1.0"

__all__ = ['__version__']
