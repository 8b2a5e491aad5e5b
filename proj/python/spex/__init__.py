"""Spectral extremal graph toolkit."""

from ._spex import *  # noqa: F401,F403
from ._spex import Graph, Graph6Error, BudgetExceeded, ConvergenceError  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
