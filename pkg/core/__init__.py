"""Core package for Monocorr."""

from .version import __version__

__all__ = ["__version__"]
