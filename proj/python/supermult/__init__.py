"""Nilpotent multipliers and capability of finite-dimensional nilpotent Lie superalgebras."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
