"""Exact characteristic-2 computational algebra toolkit."""

__version__ = "0.1.0"
