"""Böttcher coordinates and dilatation dynamics for h(z)^2 + c."""

from ._qrb import *  # noqa: F401,F403

__version__ = "0.1.0"
