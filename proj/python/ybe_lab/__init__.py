"""Skew braces, bracoids, semibraces and set-theoretic Yang-Baxter solutions."""

from ._core import *  # noqa: F401,F403
from ._core import YbeError

__all__ = [name for name in dir() if not name.startswith("_")]
