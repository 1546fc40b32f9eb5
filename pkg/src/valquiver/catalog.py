"""Small named valued quivers used by the tests and demos."""
from __future__ import annotations

from .cartan import validate_graph
from .quiver import Orientation, parse_orientation

# name: (n, edges (i, j, b_ij, b_ji), arrows)
QUIVERS = {
    "A2": (2, [(1, 2, 1, 1)], [(1, 2)]),
    "A3": (3, [(1, 2, 1, 1), (2, 3, 1, 1)], [(1, 2), (2, 3)]),
    "A3_source2": (3, [(1, 2, 1, 1), (2, 3, 1, 1)], [(2, 1), (2, 3)]),
    "B2": (2, [(1, 2, 2, 1)], [(1, 2)]),
    "G2": (2, [(1, 2, 3, 1)], [(1, 2)]),
    "kronecker": (2, [(1, 2, 2, 2)], [(1, 2)]),
    "indefinite3": (3, [(1, 2, 2, 2), (2, 3, 1, 1)], [(1, 2), (2, 3)]),
    "B3": (3, [(1, 2, 1, 1), (2, 3, 2, 1)], [(1, 2), (3, 2)]),
    "A4": (4, [(1, 2, 1, 1), (2, 3, 1, 1), (3, 4, 1, 1)], [(1, 2), (2, 3), (3, 4)]),
    "D4": (4, [(1, 2, 1, 1), (2, 3, 1, 1), (2, 4, 1, 1)], [(1, 2), (3, 2), (4, 2)]),
    "affine_A3": (
        4,
        [(1, 2, 1, 1), (2, 3, 1, 1), (3, 4, 1, 1), (1, 4, 1, 1)],
        [(1, 2), (2, 3), (1, 4), (4, 3)],
    ),
    "A4_bipartite": (4, [(1, 2, 1, 1), (2, 3, 1, 1), (3, 4, 1, 1)], [(1, 2), (3, 2), (3, 4)]),
    "wild_star4": (4, [(1, 2, 2, 2), (2, 3, 1, 1), (2, 4, 1, 1)], [(2, 1), (3, 2), (4, 2)]),
    "affine_C2": (3, [(1, 2, 2, 1), (2, 3, 1, 2)], [(1, 2), (2, 3)]),
}

FINITE = frozenset({"A2", "A3", "A3_source2", "B2", "G2", "B3", "A4", "A4_bipartite", "D4"})

# rank-2 and rank-3 graphs used only for the finite-type dichotomy
EXTRA_GRAPHS = {
    "rank2_4_1": (2, [(1, 2, 4, 1)]),
    "rank2_3_3": (2, [(1, 2, 3, 3)]),
    "rank2_3_2": (2, [(1, 2, 3, 2)]),
    "C3": (3, [(1, 2, 1, 1), (2, 3, 1, 2)]),
    "affine_A2": (3, [(1, 2, 1, 1), (2, 3, 1, 1), (1, 3, 1, 1)]),
    "affine_G2": (3, [(1, 2, 1, 1), (2, 3, 1, 3)]),
    "affine_C2_dual": (3, [(1, 2, 1, 2), (2, 3, 2, 1)]),
    "affine_A4_2": (3, [(1, 2, 1, 2), (2, 3, 1, 2)]),
}


def quiver(name: str) -> Orientation:
    n, edges, arrows = QUIVERS[name]
    return parse_orientation(validate_graph(n, edges), arrows)


def graph(name: str):
    if name in QUIVERS:
        n, edges, _ = QUIVERS[name]
    else:
        n, edges = EXTRA_GRAPHS[name]
    return validate_graph(n, edges)


def names(max_rank: int = 4) -> list[str]:
    return [k for k, (n, _, _) in QUIVERS.items() if n <= max_rank]


def graph_names(max_rank: int = 3) -> list[str]:
    out = [k for k, (n, _, _) in QUIVERS.items() if n <= max_rank]
    out += [k for k, (n, _) in EXTRA_GRAPHS.items() if n <= max_rank]
    return out
