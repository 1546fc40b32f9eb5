"""Indecomposable preprojective classes at the level of dimension vectors.

An indecomposable preprojective module is named by the pair ``(r, x)`` of its
shortest annihilating sequence ``S_{r,x}``.  Its dimension vector is obtained
by starting at ``e_{x_s}`` and applying ``sigma_{x_{s-1}}, ..., sigma_{x_1}``;
when an intermediate vector stops being positive the corresponding module is
zero and no class exists.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanMatrix, cartan_matrix
from .errors import EmptySequence, InternalPositivityFailure, NotPreprojective
from .quiver import Orientation, tq_order
from .sequences import (
    AdmissibleSequence,
    is_subsequence,
    multiplicity,
    principal_sequence,
    word_of,
)
from .weyl import RootVector, is_positive, is_reduced, reflect, unit


@lru_cache(maxsize=None)
def _cartan(graph) -> CartanMatrix:
    return cartan_matrix(graph)


@dataclass(frozen=True)
class PositivityTrace:
    """Vectors ``v_s, v_{s-1}, ...`` with ``v_s = e_{x_s}``, ``v_i = sigma_{x_i}(v_{i+1})``.

    ``zero_at`` is the 1-based position ``i`` of the first non-positive
    ``v_i``; the trace stops there.  ``None`` means every vector is positive.
    """

    letters: tuple[int, ...]
    vectors: tuple[RootVector, ...]
    zero_at: int | None

    @property
    def positive(self) -> bool:
        return self.zero_at is None

    @property
    def dim(self) -> RootVector | None:
        return self.vectors[-1] if self.positive else None

    def steps(self):
        """``(position, letter, vector)`` for each computed vector."""
        s = len(self.letters)
        for k, v in enumerate(self.vectors):
            pos = s - k
            yield pos, self.letters[pos - 1], v


def dim_of_sequence(a: CartanMatrix, s) -> PositivityTrace:
    """Positivity trace of ``M(S)``; its final vector is ``dim M(S)``."""
    letters = tuple(s.letters if isinstance(s, AdmissibleSequence) else s)
    if not letters:
        raise EmptySequence("dimension trace needs a nonempty sequence")
    v = unit(a.n, letters[-1])
    vectors = [v]
    for pos in range(len(letters) - 1, 0, -1):
        v = reflect(a, letters[pos - 1], v)
        vectors.append(v)
        if not is_positive(v):
            return PositivityTrace(letters, tuple(vectors), pos)
    return PositivityTrace(letters, tuple(vectors), None)


@dataclass(frozen=True)
class PreprojectiveClass:
    r: int
    x: int
    dim: RootVector
    sequence: AdmissibleSequence

    @property
    def base(self) -> Orientation:
        return self.sequence.base

    def __str__(self):
        return f"{self.r} {self.x} : dim " + " ".join(map(str, self.dim))


def class_of(o: Orientation, r: int, x: int) -> PreprojectiveClass:
    """The indecomposable preprojective with ``S_M ~ S_{r,x}``.

    Raises ``NotPreprojective`` when the trace of ``S_{r,x}`` hits zero, which
    happens only for Dynkin graphs once ``r`` runs past the component.
    """
    seq = principal_sequence(o, r, x)
    trace = dim_of_sequence(_cartan(o.graph), seq)
    if not trace.positive:
        raise NotPreprojective(r, x, trace.zero_at)
    return PreprojectiveClass(r, x, trace.dim, seq)


def shortest_annihilating(c: PreprojectiveClass) -> AdmissibleSequence:
    return c.sequence


def apply_functors(a: CartanMatrix, s: AdmissibleSequence, dim) -> RootVector:
    """Dimension vector of ``F(S) M`` for an indecomposable ``M`` of dimension ``dim``.

    A reflection at sink ``x`` kills exactly the simple module ``L_x`` and
    acts on every other indecomposable by ``sigma_x``.
    """
    v = tuple(dim)
    zero = (0,) * a.n
    for x in s.letters:
        if v == zero:
            break
        if v == unit(a.n, x):
            v = zero
            continue
        v = reflect(a, x, v)
        if not is_positive(v):
            raise InternalPositivityFailure(
                f"reflection at {x} produced a non-positive dimension vector {v}"
            )
    return v


def annihilates(s: AdmissibleSequence, c: PreprojectiveClass) -> bool:
    """``F(S)`` kills the class iff ``S_{r,x}`` is a subsequence of ``S``.

    The dimension-vector simulation is run as well and must agree.
    """
    by_order = is_subsequence(c.sequence, s)
    a = _cartan(s.base.graph)
    by_dims = not any(apply_functors(a, s, c.dim))
    if by_order != by_dims:
        raise InternalPositivityFailure(
            f"annihilation disagrees for S=({s}) and class ({c.r},{c.x})"
        )
    return by_order


def realizable(s: AdmissibleSequence) -> bool:
    """``S ~ S_M`` for some preprojective ``M`` iff ``w(S)`` is reduced."""
    return is_reduced(_cartan(s.base.graph), word_of(s))


def classes_below(s: AdmissibleSequence) -> list[PreprojectiveClass]:
    """Indecomposable classes whose shortest sequence is a subsequence of ``s``."""
    m = multiplicity(s)
    out = []
    o = s.base
    for r in range(1, max(m, default=0) + 1):
        for x in o.graph.vertices:
            seq = principal_sequence(o, r, x)
            if all(p <= q for p, q in zip(multiplicity(seq), m)):
                try:
                    out.append(class_of(o, r, x))
                except NotPreprojective:
                    pass
    return out


def realizing_witness(s: AdmissibleSequence) -> tuple[tuple[int, int], ...] | None:
    """Classes ``(r_i, x_i)`` with ``S ~ S_{r_1,x_1} v ... v S_{r_k,x_k}``, or ``None``.

    Any such join is the shortest sequence of the direct sum of those
    classes, so a witness exhibits ``S`` as some ``S_M``.  Only classes below
    ``S`` can take part and the join of all of them is the best candidate.
    """
    m = multiplicity(s)
    below = classes_below(s)
    if not any(m):
        return ()
    top = [0] * len(m)
    for c in below:
        top = [max(p, q) for p, q in zip(top, multiplicity(c.sequence))]
    if tuple(top) != m:
        return None
    maximal = [
        c for c in below
        if not any(d is not c and is_subsequence(c.sequence, d.sequence)
                   and not is_subsequence(d.sequence, c.sequence) for d in below)
    ]
    return tuple((c.r, c.x) for c in maximal)


def preproj_leq(c1: PreprojectiveClass, c2: PreprojectiveClass) -> bool:
    """Order of the preprojective component: ``S_{c1}`` is a subsequence of ``S_{c2}``."""
    return is_subsequence(c1.sequence, c2.sequence)


def enumerate_classes(o: Orientation, max_r: int) -> list[PreprojectiveClass]:
    """Every class ``(r, x)`` with ``r <= max_r``, in translation-quiver order.

    Pairs whose principal sequence is not realized by a module (Dynkin case)
    are left out.
    """
    if max_r < 1:
        raise ValueError("max_r must be at least 1")
    out = []
    for level, x in tq_order(o, max_r):
        try:
            out.append(class_of(o, level + 1, x))
        except NotPreprojective:
            pass
    return out
