"""Brute-force reference implementations.

Exponential by design; used by the test suite and by the ``oracle``
subcommand, never by the library code paths they check.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cartan import CartanMatrix
from .errors import CapExceeded
from .quiver import Orientation
from .weyl import WeylElement, is_positive, simple_reflection


@dataclass(frozen=True)
class CayleyTable:
    """Lengths of every element reached by BFS, keyed by matrix."""

    lengths: dict
    finite: bool

    @property
    def order(self) -> int | None:
        return len(self.lengths) if self.finite else None

    @property
    def max_length(self) -> int:
        return max(self.lengths.values())

    def status(self) -> str:
        return f"Finite({self.order})" if self.finite else "Truncated"


def bfs_lengths(a: CartanMatrix, cap: int, require_closure: bool = False) -> CayleyTable:
    """Breadth-first search of the Cayley graph from the identity.

    Explores right multiplication by simple reflections and stops once
    ``cap`` elements are known.  The table is ``finite`` only when the
    frontier empties first.
    """
    gens = [simple_reflection(a, i).matrix for i in range(1, a.n + 1)]
    ident = WeylElement.identity(a.n).matrix
    lengths = {ident: 0}
    frontier = deque([ident])
    truncated = False
    while frontier:
        m = frontier.popleft()
        for g in gens:
            prod = _mul(m, g)
            if prod in lengths:
                continue
            if len(lengths) >= cap:
                truncated = True
                frontier.clear()
                break
            lengths[prod] = lengths[m] + 1
            frontier.append(prod)
    if truncated and require_closure:
        raise CapExceeded(f"Cayley graph not closed within {cap} elements")
    return CayleyTable(lengths, not truncated)


def _mul(x, y):
    cols = list(zip(*y))
    return tuple(tuple(sum(p * q for p, q in zip(row, col)) for col in cols) for row in x)


def positive_roots(a: CartanMatrix, cap: int = 10_000) -> set:
    """Positive vectors in the W-orbit of the simple roots (real positive roots)."""
    n = a.n
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for i in range(n):
            row = a.a[i]
            c = sum(x * y for x, y in zip(row, v))
            w = list(v)
            w[i] -= c
            w = tuple(w)
            if w not in seen:
                if len(seen) >= cap:
                    raise CapExceeded("root orbit larger than cap")
                seen.add(w)
                queue.append(w)
    return {v for v in seen if is_positive(v)}


def _arrows(o: Orientation) -> frozenset:
    return frozenset(o.arrows)


def _is_sink(arrows, x) -> bool:
    return all(s != x for s, _ in arrows)


def _flip(arrows, x) -> frozenset:
    return frozenset((e, s) if x in (s, e) else (s, e) for s, e in arrows)


def enumerate_admissible(o: Orientation, max_len: int) -> list[tuple[int, ...]]:
    """All admissible sequences of length at most ``max_len`` (depth first)."""
    out = []
    verts = range(1, o.graph.n + 1)

    def walk(prefix, arrows):
        out.append(prefix)
        if len(prefix) == max_len:
            return
        for x in verts:
            if _is_sink(arrows, x):
                walk(prefix + (x,), _flip(arrows, x))

    walk((), _arrows(o))
    return out


def equivalence_closure(o: Orientation, letters) -> set:
    """The equivalence class of a sequence under swaps of non-adjacent neighbours."""
    g = o.graph
    start = tuple(letters)
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for i in range(len(s) - 1):
            if s[i] == s[i + 1] or g.has_edge(s[i], s[i + 1]):
                continue
            t = s[:i] + (s[i + 1], s[i]) + s[i + 2:]
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def is_admissible_bf(o: Orientation, letters) -> bool:
    arrows = _arrows(o)
    for x in letters:
        if not _is_sink(arrows, x):
            return False
        arrows = _flip(arrows, x)
    return True
