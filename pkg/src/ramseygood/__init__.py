"""Ramsey goodness of powers of paths: constructions, exact search, embeddings, pipelines."""

from .colouring import BLUE, RED, EdgeColouring, Embedding, validate_embedding
from .graph import Graph, complete_graph, complete_multipartite, cycle_graph, cycle_power, path_graph, path_power

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "EdgeColouring",
    "Embedding",
    "Graph",
    "complete_graph",
    "complete_multipartite",
    "cycle_graph",
    "cycle_power",
    "path_graph",
    "path_power",
    "validate_embedding",
]
