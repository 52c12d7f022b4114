"""Exact permutation-lattice tools for finite p-groups."""

from ._core import Document

__all__ = ["Document"]
