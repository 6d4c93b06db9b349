"""Exact solvers and exhaustive verification for domination-type graph invariants.

The package computes the domination number, independent domination number,
independence number, and common independence number of small graphs, decides
common-domination perfection by three independent methods, and exhaustively
checks the characterization and its class-restricted variants over complete
universes of non-isomorphic graphs.
"""

from domiperf.graph import Graph, GraphError, build_graph

__all__ = ["Graph", "GraphError", "build_graph"]
