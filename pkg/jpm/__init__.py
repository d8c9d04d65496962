"""Jumbled (Parikh-vector) pattern matching over indexed texts."""

__version__ = "0.3.0"
