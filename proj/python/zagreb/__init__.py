"""First and second Zagreb index comparisons."""

from zagreb._core import *  # noqa: F401,F403
from zagreb._core import Graph, Verdict

__all__ = [name for name in dir() if not name.startswith("_")]
