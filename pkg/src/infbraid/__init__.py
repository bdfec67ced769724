"""Exact braid-group representations lifted from infinitesimal braid representations."""

__version__ = "0.1.0"
