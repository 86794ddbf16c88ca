"""
Command-line interface for pdrazin.
"""

from .app import app

__all__ = ["app"]
