"""Valued graphs, symmetrizers and generalized Cartan matrices.

Vertices are the integers ``1..n`` throughout the package.  Internally the
valuation is stored as a dense ``n x n`` tuple indexed from zero; every public
function speaks in 1-based vertex labels.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from .errors import (
    AsymmetricZero,
    Disconnected,
    DuplicateEdge,
    LoopEdge,
    NoSymmetrizer,
    ParseError,
    RankOne,
    VertexOutOfRange,
)

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ValuedGraph:
    """A connected valued graph on vertices ``1..n``.

    Build instances with :func:`validate_graph`; the constructor itself does
    not check anything.
    """

    n: int
    b: Matrix

    def value(self, i: int, j: int) -> int:
        """The valuation ``b_ij``."""
        return self.b[i - 1][j - 1]

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and self.b[i - 1][j - 1] != 0

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as pairs ``(i, j)`` with ``i < j``, sorted."""
        return tuple(
            (i, j)
            for i in self.vertices
            for j in range(i + 1, self.n + 1)
            if self.b[i - 1][j - 1]
        )

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in self.vertices if self.has_edge(i, j))

    def edge_lines(self) -> list[str]:
        return [f"edge {i} {j} {self.value(i, j)} {self.value(j, i)}" for i, j in self.edges]


@dataclass(frozen=True)
class Symmetrizer:
    d: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.d[i - 1]


@dataclass(frozen=True)
class CartanMatrix:
    """An indecomposable symmetrizable generalized Cartan matrix."""

    a: Matrix

    @property
    def n(self) -> int:
        return len(self.a)

    def entry(self, i: int, j: int) -> int:
        return self.a[i - 1][j - 1]

    @classmethod
    def from_rows(cls, rows) -> CartanMatrix:
        """Validate a raw integer matrix and wrap it.

        Goes through :func:`graph_of_rows`, so all valued-graph errors apply.
        """
        return cartan_matrix(graph_of_rows(rows))


def _check_vertex(n, v):
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
        raise VertexOutOfRange(f"vertex {v!r} not in 1..{n}")


def validate_graph(n: int, edges) -> ValuedGraph:
    """Build a :class:`ValuedGraph` from ``n`` and ``(i, j, b_ij, b_ji)`` tuples.

    Raises one of ``RankOne``, ``VertexOutOfRange``, ``LoopEdge``,
    ``DuplicateEdge``, ``AsymmetricZero``, ``Disconnected`` or
    ``NoSymmetrizer`` when the data cannot describe a connected valued graph.
    """
    if n <= 1:
        raise RankOne(f"need at least two vertices, got n={n}")
    b = [[0] * n for _ in range(n)]
    seen = set()
    for edge in edges:
        i, j, bij, bji = edge
        _check_vertex(n, i)
        _check_vertex(n, j)
        if i == j:
            raise LoopEdge(f"loop at vertex {i}")
        key = frozenset((i, j))
        if key in seen:
            raise DuplicateEdge(f"edge {{{i},{j}}} given twice")
        seen.add(key)
        if bij < 0 or bji < 0:
            raise ParseError(f"negative valuation on edge {{{i},{j}}}")
        if (bij == 0) != (bji == 0) or bij == 0:
            raise AsymmetricZero(f"edge {{{i},{j}}} has b_ij={bij}, b_ji={bji}")
        b[i - 1][j - 1] = bij
        b[j - 1][i - 1] = bji
    g = ValuedGraph(n, tuple(tuple(row) for row in b))
    if len(_component(g, 1)) != n:
        raise Disconnected("underlying graph is not connected")
    symmetrizer(g)
    return g


def graph_of_rows(rows) -> ValuedGraph:
    """Valued graph of a generalized Cartan matrix given as nested rows."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParseError("Cartan matrix must be square")
    edges = []
    for i in range(n):
        if rows[i][i] != 2:
            raise ParseError(f"diagonal entry a_{i + 1}{i + 1} must be 2")
        for j in range(i + 1, n):
            aij, aji = rows[i][j], rows[j][i]
            if aij > 0 or aji > 0:
                raise ParseError("off-diagonal entries must be nonpositive")
            if aij or aji:
                edges.append((i + 1, j + 1, -aij, -aji))
    return validate_graph(n, edges)


def _component(g, start):
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def symmetrizer(g: ValuedGraph) -> Symmetrizer:
    """Smallest positive integers ``d`` with ``d_i b_ij = d_j b_ji``.

    Ratios are propagated along a BFS spanning tree from vertex 1 and every
    edge is re-checked afterwards, so inconsistent cycles are caught.
    """
    ratio = {1: Fraction(1)}
    queue = deque([1])
    while queue:
        i = queue.popleft()
        for j in g.neighbors(i):
            if j not in ratio:
                ratio[j] = ratio[i] * g.value(i, j) / g.value(j, i)
                queue.append(j)
    if len(ratio) != g.n:
        raise Disconnected("underlying graph is not connected")
    den = lcm(*(q.denominator for q in ratio.values()))
    d = [int(ratio[v] * den) for v in g.vertices]
    common = gcd(*d)
    d = tuple(x // common for x in d)
    for i, j in g.edges:
        if d[i - 1] * g.value(i, j) != d[j - 1] * g.value(j, i):
            raise NoSymmetrizer(f"valuation is inconsistent around edge {{{i},{j}}}")
    return Symmetrizer(d)


def cartan_matrix(g: ValuedGraph) -> CartanMatrix:
    n = g.n
    return CartanMatrix(
        tuple(
            tuple(2 if i == j else -g.b[i][j] for j in range(n))
            for i in range(n)
        )
    )


def graph_of(a: CartanMatrix) -> ValuedGraph:
    return graph_of_rows(a.a)


def leading_minors(m) -> list[int]:
    """All leading principal minors of an integer matrix, exactly."""
    return [_det([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


def _det(m) -> int:
    """Exact determinant by Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return int(det)


def symmetrized(g: ValuedGraph) -> Matrix:
    """The symmetric matrix ``D A`` with ``D = diag(d)``."""
    d = symmetrizer(g).d
    a = cartan_matrix(g).a
    return tuple(tuple(d[i] * a[i][j] for j in range(g.n)) for i in range(g.n))


def is_finite_type(g: ValuedGraph) -> bool:
    """True iff ``D A`` is positive definite, i.e. the graph is of Dynkin type."""
    return all(m > 0 for m in leading_minors(symmetrized(g)))
