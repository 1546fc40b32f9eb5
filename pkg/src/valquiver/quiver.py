"""Acyclic orientations, sink reflections, the vertex poset, filters and hulls,
and the translation quiver N(Gamma, Lambda^op).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .cartan import ValuedGraph
from .errors import (
    DuplicateEdge,
    NotAFilter,
    NotPermutation,
    OrientedCycle,
    Stuck,
    UnknownEdge,
    UnorientedEdge,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class Orientation:
    """An acyclic orientation of a valued graph.

    ``forward[k]`` tells whether the ``k``-th edge ``(i, j)`` of
    ``graph.edges`` (with ``i < j``) is the arrow ``i -> j``.
    """

    graph: ValuedGraph
    forward: tuple[bool, ...]

    @cached_property
    def arrows(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j) if fwd else (j, i) for (i, j), fwd in zip(self.graph.edges, self.forward)
        )

    @cached_property
    def _succ(self) -> dict[int, tuple[int, ...]]:
        succ = {v: [] for v in self.graph.vertices}
        for s, e in self.arrows:
            succ[s].append(e)
        return {v: tuple(sorted(w)) for v, w in succ.items()}

    @cached_property
    def _pred(self) -> dict[int, tuple[int, ...]]:
        pred = {v: [] for v in self.graph.vertices}
        for s, e in self.arrows:
            pred[e].append(s)
        return {v: tuple(sorted(w)) for v, w in pred.items()}

    def successors(self, x: int) -> tuple[int, ...]:
        return self._succ[x]

    def predecessors(self, x: int) -> tuple[int, ...]:
        return self._pred[x]

    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in self.graph.vertices if not self._succ[v])

    def arrow_lines(self) -> list[str]:
        return [f"arrow {s} {e}" for s, e in self.arrows]

    @cached_property
    def poset(self) -> VertexPoset:
        return vertex_poset(self)


def _has_cycle(g: ValuedGraph, arrows) -> bool:
    indeg = {v: 0 for v in g.vertices}
    succ = {v: [] for v in g.vertices}
    for s, e in arrows:
        succ[s].append(e)
        indeg[e] += 1
    queue = deque(v for v in g.vertices if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen != g.n


def parse_orientation(g: ValuedGraph, arrows) -> Orientation:
    """Orientation from ``(s, e)`` pairs, one per edge of ``g``."""
    index = {e: k for k, e in enumerate(g.edges)}
    forward = [None] * len(g.edges)
    for s, e in arrows:
        for v in (s, e):
            if not isinstance(v, int) or not 1 <= v <= g.n:
                raise VertexOutOfRange(f"vertex {v!r} not in 1..{g.n}")
        key = (min(s, e), max(s, e))
        if s == e or key not in index:
            raise UnknownEdge(f"arrow {s}->{e} does not lie on an edge")
        k = index[key]
        if forward[k] is not None:
            raise DuplicateEdge(f"edge {{{key[0]},{key[1]}}} oriented twice")
        forward[k] = s < e
    missing = [g.edges[k] for k, f in enumerate(forward) if f is None]
    if missing:
        i, j = missing[0]
        raise UnorientedEdge(f"edge {{{i},{j}}} has no arrow")
    o = Orientation(g, tuple(forward))
    if _has_cycle(g, o.arrows):
        raise OrientedCycle("orientation contains an oriented cycle")
    return o


def is_sink(o: Orientation, x: int) -> bool:
    """No arrow starts at ``x``."""
    return not o.successors(x)


def is_source(o: Orientation, x: int) -> bool:
    return not o.predecessors(x)


def reflect_orientation(o: Orientation, x: int) -> Orientation:
    """``sigma_x Lambda``: reverse every arrow incident with ``x``."""
    if not 1 <= x <= o.graph.n:
        raise VertexOutOfRange(f"vertex {x!r} not in 1..{o.graph.n}")
    forward = tuple(
        (not f) if x in edge else f for edge, f in zip(o.graph.edges, o.forward)
    )
    out = Orientation(o.graph, forward)
    if not (is_sink(o, x) or is_source(o, x)) and _has_cycle(o.graph, out.arrows):
        raise OrientedCycle(f"reflecting at {x} creates an oriented cycle")
    return out


def reflect_sequence(o: Orientation, letters) -> Orientation:
    for x in letters:
        o = reflect_orientation(o, x)
    return o


@dataclass(frozen=True)
class VertexPoset:
    """``x <= y`` iff there is a path ``x -> y``.  ``up[x]`` is ``<x>``."""

    n: int
    up: dict

    def leq(self, x: int, y: int) -> bool:
        return y in self.up[x]

    def is_filter(self, f) -> bool:
        return all(self.up[x] <= f for x in f)

    def __hash__(self):
        return hash((self.n, tuple(sorted((k, tuple(sorted(v))) for k, v in self.up.items()))))


def vertex_poset(o: Orientation) -> VertexPoset:
    up = {}
    for v in o.graph.vertices:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in o.successors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        up[v] = frozenset(seen)
    return VertexPoset(o.graph.n, up)


def filter_generated(p: VertexPoset, xs) -> frozenset:
    """``<X>``: every vertex above some member of ``xs``."""
    out = set()
    for x in xs:
        out |= p.up[x]
    return frozenset(out)


def principal_filter(o: Orientation, x: int) -> frozenset:
    return o.poset.up[x]


def hull(o: Orientation, f) -> frozenset:
    """Smallest filter containing ``f`` and every vertex adjacent to it."""
    f = frozenset(f)
    p = o.poset
    if not p.is_filter(f):
        raise NotAFilter(f"{sorted(f)} is not a filter")
    g = o.graph
    boundary = {v for v in g.vertices if v not in f and any(g.has_edge(v, u) for u in f)}
    return filter_generated(p, f | boundary)


def sink_order(o: Orientation, support) -> tuple[tuple[int, ...], Orientation]:
    """Order ``support`` as an admissible block: least-indexed sink first.

    Returns the letters and the orientation after reflecting at all of them.
    Raises ``Stuck`` when no member of the remaining support is a sink.
    Reflecting at a sink never destroys another vertex's sink status, so the
    greedy choice cannot paint itself into a corner.
    """
    remaining = set(support)
    letters = []
    while remaining:
        x = next((v for v in sorted(remaining) if is_sink(o, v)), None)
        if x is None:
            raise Stuck(f"no sink among {sorted(remaining)}")
        letters.append(x)
        remaining.discard(x)
        o = reflect_orientation(o, x)
    return tuple(letters), o


def orientation_from_coxeter_order(g: ValuedGraph, perm) -> Orientation:
    """The orientation making ``perm`` a complete admissible sequence.

    Each edge between ``v_i`` and ``v_j`` with ``i < j`` points ``v_j -> v_i``.
    """
    perm = tuple(perm)
    if sorted(perm) != list(g.vertices):
        raise NotPermutation(f"{perm} is not a permutation of 1..{g.n}")
    pos = {v: k for k, v in enumerate(perm)}
    arrows = [(i, j) if pos[i] > pos[j] else (j, i) for i, j in g.edges]
    return parse_orientation(g, arrows)


# translation quiver N(Gamma, Lambda^op)

TQVertex = tuple[int, int]


def tq_successors(o: Orientation, vertex: TQVertex) -> list[TQVertex]:
    """Arrow targets from ``(m, w)``.

    Every arrow ``u -> v`` of the quiver yields ``(m, v) -> (m, u)`` and
    ``(m, u) -> (m + 1, v)``.
    """
    m, w = vertex
    same = [(m, u) for u in o.predecessors(w)]
    nxt = [(m + 1, v) for v in o.successors(w)]
    return same + nxt


def tq_reachable(o: Orientation, frm: TQVertex, to: TQVertex) -> bool:
    """Is there a (possibly empty) path ``frm -> to``?"""
    if frm == to:
        return True
    if frm[0] > to[0]:
        return False
    seen = {frm}
    queue = deque([frm])
    while queue:
        cur = queue.popleft()
        for nxt in tq_successors(o, cur):
            if nxt == to:
                return True
            if nxt[0] <= to[0] and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def tq_level_order(o: Orientation) -> tuple[int, ...]:
    """Vertices of one level of N(Gamma, Lambda^op) in path order.

    A linear extension of the arrows ``(m, v) -> (m, u)``: arrow heads of the
    quiver come first, least index breaking ties.
    """
    out_left = {v: len(o.successors(v)) for v in o.graph.vertices}
    ready = sorted(v for v, k in out_left.items() if k == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for u in o.predecessors(v):
            out_left[u] -= 1
            if out_left[u] == 0:
                ready.append(u)
        ready.sort()
    return tuple(order)


def tq_order(o: Orientation, levels: int) -> list[TQVertex]:
    """The first ``levels`` levels of N(Gamma, Lambda^op), in path order."""
    per_level = tq_level_order(o)
    return [(m, v) for m in range(levels) for v in per_level]
