"""(+)-admissible sequences on a valued quiver.

Equivalence, the subsequence preorder and the lattice operations are all
decided on multiplicity vectors: two admissible sequences on the same quiver
are equivalent exactly when every vertex occurs equally often in both, and
``S`` is a subsequence of ``T`` exactly when no vertex occurs more often in
``S``.  Representatives are materialized block by block, each block holding
the vertices of multiplicity at least ``i`` in least-index sink order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DifferentBase, EmptySequence, NotASink, Stuck, VertexOutOfRange
from .quiver import (
    Orientation,
    hull,
    is_sink,
    principal_filter,
    reflect_orientation,
    sink_order,
)

Multiplicity = tuple[int, ...]


@dataclass(frozen=True)
class AdmissibleSequence:
    """A validated admissible sequence; build with :func:`validate_admissible`."""

    base: Orientation
    letters: tuple[int, ...]

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters))

    @cached_property
    def end(self) -> Orientation:
        """``Lambda^S``, the orientation after all reflections."""
        o = self.base
        for x in self.letters:
            o = reflect_orientation(o, x)
        return o

    @property
    def support(self) -> frozenset:
        return frozenset(self.letters)


def validate_admissible(o: Orientation, letters) -> AdmissibleSequence:
    """Check that each letter is a sink once its predecessors are reflected.

    ``NotASink.position`` is 1-based.
    """
    letters = tuple(letters)
    cur = o
    for pos, x in enumerate(letters, start=1):
        if not isinstance(x, int) or not 1 <= x <= o.graph.n:
            raise VertexOutOfRange(f"letter {x!r} not in 1..{o.graph.n}")
        if not is_sink(cur, x):
            raise NotASink(pos, x)
        cur = reflect_orientation(cur, x)
    s = AdmissibleSequence(o, letters)
    s.__dict__["end"] = cur
    return s


def is_admissible(o: Orientation, letters) -> bool:
    try:
        validate_admissible(o, letters)
    except NotASink:
        return False
    return True


def concat(s: AdmissibleSequence, letters) -> AdmissibleSequence:
    """``S T`` where ``T`` must be admissible on ``Lambda^S``."""
    tail = validate_admissible(s.end, letters)
    out = AdmissibleSequence(s.base, s.letters + tail.letters)
    out.__dict__["end"] = tail.end
    return out


def multiplicity(s: AdmissibleSequence) -> Multiplicity:
    """``m_S(v)`` for ``v = 1..n`` as a tuple (index ``v - 1``)."""
    m = [0] * s.base.graph.n
    for x in s.letters:
        m[x - 1] += 1
    return tuple(m)


def _same_base(s, t):
    if s.base != t.base:
        raise DifferentBase("sequences live on different orientations")


def is_equivalent(s: AdmissibleSequence, t: AdmissibleSequence) -> bool:
    _same_base(s, t)
    return multiplicity(s) == multiplicity(t)


def is_subsequence(s: AdmissibleSequence, t: AdmissibleSequence) -> bool:
    """``S`` precedes ``T`` in the subsequence preorder."""
    _same_base(s, t)
    return all(a <= b for a, b in zip(multiplicity(s), multiplicity(t)))


@dataclass(frozen=True)
class CanonicalForm:
    """Blocks ``S_1 ... S_r`` of distinct vertices with nested supports."""

    base: Orientation
    blocks: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.blocks)

    @property
    def supports(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(b) for b in self.blocks)

    def sequence(self) -> AdmissibleSequence:
        return validate_admissible(self.base, [x for b in self.blocks for x in b])

    def __str__(self):
        return " | ".join(" ".join(map(str, b)) for b in self.blocks)


def level_supports(m: Multiplicity) -> list[frozenset]:
    """``{v : m(v) >= i}`` for ``i = 1..max(m)``."""
    top = max(m, default=0)
    return [
        frozenset(v for v, k in enumerate(m, start=1) if k >= i) for i in range(1, top + 1)
    ]


def blocks_from_supports(o: Orientation, supports) -> CanonicalForm:
    """Materialize blocks with the given supports, left to right."""
    blocks = []
    cur = o
    for i, supp in enumerate(supports, start=1):
        try:
            block, cur = sink_order(cur, supp)
        except Stuck as exc:
            raise Stuck(f"block {i}: {exc}") from None
        blocks.append(block)
    return CanonicalForm(o, tuple(blocks))


def realize(o: Orientation, m: Multiplicity) -> AdmissibleSequence:
    """The canonical representative with multiplicity vector ``m``."""
    return blocks_from_supports(o, level_supports(m)).sequence()


def canonical_form(s: AdmissibleSequence) -> CanonicalForm:
    if not s.letters:
        raise EmptySequence("the empty sequence has no canonical form")
    m = multiplicity(s)
    cf = blocks_from_supports(s.base, level_supports(m))
    if multiplicity(cf.sequence()) != m:
        raise Stuck("canonical form lost multiplicity")
    return cf


def meet(s: AdmissibleSequence, t: AdmissibleSequence) -> AdmissibleSequence:
    """Greatest lower bound: pointwise minimum of multiplicities."""
    _same_base(s, t)
    return realize(s.base, tuple(map(min, multiplicity(s), multiplicity(t))))


def join(s: AdmissibleSequence, t: AdmissibleSequence) -> AdmissibleSequence:
    """Least upper bound: pointwise maximum of multiplicities."""
    _same_base(s, t)
    return realize(s.base, tuple(map(max, multiplicity(s), multiplicity(t))))


def principal_supports(o: Orientation, r: int, x: int) -> list[frozenset]:
    """Supports ``T_1 ⊇ ... ⊇ T_r`` with ``T_r = <x>`` and ``T_i = H(T_{i+1})``."""
    if r < 1:
        raise ValueError("r must be positive")
    if not 1 <= x <= o.graph.n:
        raise VertexOutOfRange(f"vertex {x!r} not in 1..{o.graph.n}")
    supports = [principal_filter(o, x)]
    for _ in range(r - 1):
        supports.append(hull(o, supports[-1]))
    return supports[::-1]


def principal_sequence(o: Orientation, r: int, x: int) -> AdmissibleSequence:
    """``S_{r,x}``, the principal sequence of size ``r`` ending on ``<x>``."""
    return blocks_from_supports(o, principal_supports(o, r, x)).sequence()


def principal_id(s: AdmissibleSequence) -> tuple[int, int] | None:
    """``(r, x)`` with ``S ~ S_{r,x}``, or ``None`` if ``S`` is not principal."""
    cf = canonical_form(s)
    supports = cf.supports
    o = s.base
    for i in range(len(supports) - 1):
        if supports[i] != hull(o, supports[i + 1]):
            return None
    last = supports[-1]
    for x in sorted(last):
        if principal_filter(o, x) == last:
            return cf.size, x
    return None


def is_principal(s: AdmissibleSequence) -> bool:
    return principal_id(s) is not None


def word_of(s: AdmissibleSequence) -> tuple[int, ...]:
    """Letters of ``w(S) = sigma_{x_s} ... sigma_{x_1}``; ``x_1`` acts first."""
    return s.letters


def complete_sequence(o: Orientation) -> AdmissibleSequence:
    """Each vertex once, least-indexed sink first."""
    letters, _ = sink_order(o, o.graph.vertices)
    return validate_admissible(o, letters)


def power(k: AdmissibleSequence, m: int) -> AdmissibleSequence:
    """``K^m`` for a complete sequence ``K``."""
    return validate_admissible(k.base, k.letters * m)
