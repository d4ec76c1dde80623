"""Exact checks of rank-2 Nichols algebra data, screening charges and free-field W-algebras."""

__version__ = "0.1.0"
