"""Entanglement criteria built on local orthogonal observables."""

from ._core import *  # noqa: F401,F403
from ._core import Error, OrthTransform, State, Witness  # noqa: F401

__version__ = "0.1.0"
