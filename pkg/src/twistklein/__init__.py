"""Twists of the Klein quartic over the binary field."""

__version__ = "0.1.0"
