"""Exact verification toolkit for genus-2 curve configurations on Fano surfaces of cubic threefolds."""

__version__ = "0.1.0"
