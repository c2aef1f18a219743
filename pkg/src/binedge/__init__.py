"""Graver and universal Groebner bases of (parity) binomial edge ideals."""

from .errors import InvalidInput
from .graph import Graph, Walk
from .monomials import Binomial, LexOrder, Monomial

__all__ = ["Binomial", "Graph", "InvalidInput", "LexOrder", "Monomial", "Walk"]
__version__ = "0.1.0"
