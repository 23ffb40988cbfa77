"""Constant-time substring locus queries on suffix trees."""

from .text import LEFT, RIGHT, Text, build_text, build_suffix_arrays

__version__ = "0.1.0"

__all__ = [
    "LEFT",
    "RIGHT",
    "Text",
    "build_text",
    "build_suffix_arrays",
    "__version__",
]
