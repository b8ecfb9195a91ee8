"""Exact combinatorics of directed graphs of cyclic groups."""

from .cyclic import CyclicGroup, Embedding, GroupElement, decompose, reduce, transversal_size
from .errors import DgogError
from .gog import EdgeSpec, GraphOfGroups, SigmaGraph, SigmaLetter, SigmaPath, SignedEdge, load, sigma_graph

__version__ = "0.1.0"
