"""Exact-arithmetic verification toolkit for tilting-module lifting
criteria over small root systems (A1, A2, A3, B2, G2)."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import TmcvError
from .rootsystems import SYSTEMS, RootSystem, Weight, root_system

__all__ = [
    "SYSTEMS",
    "RootSystem",
    "TmcvError",
    "Weight",
    "root_system",
    "__version__",
]
