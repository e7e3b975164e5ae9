"""Exact computations in the chromatic, Temperley-Lieb and BMW algebras."""

from ._chromalg import *  # noqa: F401,F403
from ._chromalg import __doc__  # noqa: F401

__version__ = "0.1.0"
