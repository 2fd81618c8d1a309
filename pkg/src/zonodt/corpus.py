"""Bundled test corpus: small connected multigraphs and quiver/dimension-vector pairs."""

from __future__ import annotations

from .graph import (
    Multigraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    k4_minus_edge,
    path_graph,
)
from .quiver import SymmetricQuiver, multipartite_quiver


def _g(n: int, *edges) -> Multigraph:
    return Multigraph.from_edges(n, [e if len(e) == 3 else (*e, 1) for e in edges])


def graph_corpus() -> dict[str, Multigraph]:
    """Connected multigraphs with at most 6 vertices and 12 edges."""
    return {
        "K2": complete_graph(2),
        "K2^3": complete_graph(2, 3),
        "P3": path_graph(3),
        "star4": _g(5, (1, 2), (1, 3), (1, 4), (1, 5)),
        "K3": complete_graph(3),
        "K3^2": complete_graph(3, 2),
        "K3^3": complete_graph(3, 3),
        "triangle+double-pendant": _g(4, (1, 2), (1, 3), (2, 3), (3, 4, 2)),
        "path-multi": _g(3, (1, 2, 2), (2, 3, 3)),
        "C4": cycle_graph(4),
        "C4+double-chord": _g(4, (1, 2), (2, 3), (3, 4), (1, 4), (1, 3, 2)),
        "K4-e": k4_minus_edge(),
        "K4": complete_graph(4),
        "K4+double-edge": _g(4, (1, 2, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)),
        "K4^2": complete_graph(4, 2),
        "C5": cycle_graph(5),
        "C5^2": Multigraph.from_edges(5, [(i, i % 5 + 1, 2) for i in range(1, 6)]),
        "bowtie": _g(5, (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)),
        "house": _g(5, (1, 2), (2, 3), (3, 4), (4, 1), (3, 5), (4, 5)),
        "wheel5": _g(5, (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (2, 5)),
        "K_{2,3}": complete_bipartite(2, 3),
        "K5-e": _g(5, (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)),
        "K5": complete_graph(5),
        "C6": cycle_graph(6),
        "K_{2,4}": complete_bipartite(2, 4),
        "K_{3,3}": complete_bipartite(3, 3),
        "prism": _g(6, (1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)),
        "theta-chain": _g(6, (1, 2, 2), (2, 3), (3, 4, 3), (4, 5), (5, 6, 2), (6, 1)),
        "dense6": _g(6, (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4), (2, 5), (3, 6),
                     (1, 3), (2, 4), (1, 5)),
    }


def quiver_corpus() -> dict[str, tuple[SymmetricQuiver, tuple[int, ...]]]:
    """Symmetric quivers with dimension vectors whose covering graph is connected."""
    q = SymmetricQuiver.from_matrix
    return {
        "K_{2,3}-quiver": (q([[1, 1], [1, 1]]), (2, 3)),
        "2-loop@2": (q([[2]]), (2,)),
        "2-loop@3": (q([[2]]), (3,)),
        "2-loop@4": (q([[2]]), (4,)),
        "3-loop@3": (q([[3]]), (3,)),
        "4-loop@4": (q([[4]]), (4,)),
        "two-vertex@(1,1)": (q([[2, 1], [1, 2]]), (1, 1)),
        "two-vertex@(2,1)": (q([[2, 1], [1, 2]]), (2, 1)),
        "two-vertex@(2,2)": (q([[2, 1], [1, 2]]), (2, 2)),
        "double-arrow@(1,2)": (q([[1, 2], [2, 1]]), (1, 2)),
        "lopsided@(2,1)": (q([[3, 1], [1, 1]]), (2, 1)),
        "multipartite(1,3)@(1,1,1)": (multipartite_quiver(1, 3), (1, 1, 1)),
        "multipartite(1,3)@(2,1,1)": (multipartite_quiver(1, 3), (2, 1, 1)),
        "multipartite(2,2)@(2,1)": (multipartite_quiver(2, 2), (2, 1)),
    }
