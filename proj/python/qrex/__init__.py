"""Fault-tolerant quantum resource estimation for active-space chemistry."""

from qrex._core import *  # noqa: F401,F403
from qrex._core import __doc__  # noqa: F401

__version__ = "1.0.0"
