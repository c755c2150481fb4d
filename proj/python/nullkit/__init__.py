"""Ideals over GF(p) and QQ: Groebner bases, maximal ideals, radical membership."""

from ._core import Ideal, NullkitError, run

__all__ = ["Ideal", "NullkitError", "run"]
