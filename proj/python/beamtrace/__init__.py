"""Trace-driven mmWave multi-AP beam reception simulator."""

from ._beamtrace import *  # noqa: F401,F403
from ._beamtrace import __version__  # noqa: F401
