import itertools
from collections import deque

import pytest

from valquiver import catalog
from valquiver.cartan import cartan_matrix
from valquiver.errors import EmptySequence, NotPreprojective
from valquiver.oracles import enumerate_admissible, positive_roots
from valquiver.preprojective import (
    annihilates,
    apply_functors,
    class_of,
    dim_of_sequence,
    enumerate_classes,
    preproj_leq,
    realizable,
    realizing_witness,
    shortest_annihilating,
)
from valquiver.quiver import reflect_orientation
from valquiver.sequences import (
    complete_sequence,
    multiplicity,
    power,
    principal_id,
    principal_sequence,
    validate_admissible,
)
from valquiver.weyl import is_reduced

from conftest import cartan

NAMES = catalog.names()


def test_dim_examples():
    k = cartan("kronecker")
    t = dim_of_sequence(k, (2, 1, 2))
    assert t.positive and t.dim == (2, 3)
    assert t.vectors == ((0, 1), (2, 1), (2, 3))
    assert dim_of_sequence(k, (2, 1, 2, 1)).dim == (3, 4)
    t = dim_of_sequence(cartan("A2"), (2, 1, 2, 1))
    assert not t.positive and t.zero_at == 1 and t.dim is None
    with pytest.raises(EmptySequence):
        dim_of_sequence(k, ())


def test_class_of_examples(kronecker, a3):
    assert class_of(kronecker, 1, 2).dim == (0, 1)
    assert class_of(kronecker, 2, 2).dim == (2, 3)
    assert class_of(a3, 2, 3).dim == (0, 1, 0)
    # the projective-injective P_1 has no successor in the component
    with pytest.raises(NotPreprojective):
        class_of(a3, 2, 1)


def test_shortest_annihilating(kronecker, a3):
    assert shortest_annihilating(class_of(kronecker, 1, 1)).letters == (2, 1)
    assert shortest_annihilating(class_of(kronecker, 1, 2)).letters == (2,)
    assert shortest_annihilating(class_of(a3, 2, 3)).letters == (3, 2, 3)


def test_annihilates_examples(kronecker):
    simple = class_of(kronecker, 1, 2)
    assert annihilates(validate_admissible(kronecker, (2,)), simple)
    assert annihilates(validate_admissible(kronecker, (2, 1)), simple)
    assert not annihilates(validate_admissible(kronecker, (2,)), class_of(kronecker, 1, 1))


def test_realizable_examples(kronecker):
    assert realizable(validate_admissible(kronecker, (2, 1)))
    a2 = catalog.quiver("A2")
    k2 = power(complete_sequence(a2), 2)
    assert k2.letters == (2, 1, 2, 1)
    assert not realizable(k2)
    assert realizing_witness(k2) is None
    for r in range(1, 5):
        for x in (1, 2):
            assert realizable(class_of(kronecker, r, x).sequence)


def test_preproj_leq_examples(kronecker):
    c = {(r, x): class_of(kronecker, r, x) for r in (1, 2) for x in (1, 2)}
    assert preproj_leq(c[1, 2], c[1, 1])
    assert preproj_leq(c[1, 1], c[2, 2])
    assert not preproj_leq(c[2, 2], c[1, 1])


def test_enumerate_examples(kronecker, a3):
    assert [c.dim for c in enumerate_classes(kronecker, 2)] == [(0, 1), (1, 2), (2, 3), (3, 4)]
    got = enumerate_classes(a3, 2)
    assert [(c.r, c.x, c.dim) for c in got] == [
        (1, 3, (0, 0, 1)), (1, 2, (0, 1, 1)), (1, 1, (1, 1, 1)),
        (2, 3, (0, 1, 0)), (2, 2, (1, 1, 0)),
    ]
    assert len(enumerate_classes(a3, 3)) == 6


@pytest.mark.parametrize("name", NAMES)
def test_first_level_is_projectives(name):
    o = catalog.quiver(name)
    first = enumerate_classes(o, 1)
    assert len(first) == o.graph.n
    for c in first:
        # dim P_x counts paths out of x (with valuations on the multiplicity)
        assert c.dim[c.x - 1] == 1
        assert all((d > 0) == (v in o.poset.up[c.x]) for v, d in enumerate(c.dim, 1))


@pytest.mark.parametrize("name, count", [("A2", 3), ("A3", 6), ("B2", 4), ("G2", 6),
                                         ("A3_source2", 6), ("B3", 9), ("D4", 12)])
def test_finite_type_classes_are_positive_roots(name, count):
    o = catalog.quiver(name)
    roots = positive_roots(cartan_matrix(o.graph))
    assert len(roots) == count
    classes = enumerate_classes(o, 12)
    dims = [c.dim for c in classes]
    assert len(set(dims)) == len(dims) == count
    assert set(dims) == roots
    # past the last class every principal sequence hits zero
    for x in o.graph.vertices:
        with pytest.raises(NotPreprojective):
            class_of(o, 13, x)


@pytest.mark.parametrize("name", NAMES)
def test_classes_positive_and_reduced(name):
    o = catalog.quiver(name)
    a = cartan_matrix(o.graph)
    for c in enumerate_classes(o, 6):
        t = dim_of_sequence(a, c.sequence)
        assert all(any(v) and min(v) >= 0 for v in t.vectors)
        assert is_reduced(a, c.sequence.letters)


@pytest.mark.parametrize("name", NAMES)
def test_annihilation_agrees_with_dims(name):
    o = catalog.quiver(name)
    classes = enumerate_classes(o, 4)
    for letters in enumerate_admissible(o, 7):
        s = validate_admissible(o, letters)
        for c in classes:
            annihilates(s, c)  # raises if the two criteria disagree


def _connected(g, verts):
    verts = set(verts)
    start = next(iter(verts))
    seen, queue = {start}, deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in verts and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == verts


@pytest.mark.parametrize("name", NAMES)
def test_prepending_a_sink_to_a_shortest_sequence(name):
    o = catalog.quiver(name)
    a = cartan_matrix(o.graph)
    g = o.graph
    checked = 0
    for letters in enumerate_admissible(o, 8):
        if len(letters) < 2 or not _connected(g, letters):
            continue
        x1, tail = letters[0], letters[1:]
        t = validate_admissible(reflect_orientation(o, x1), tail)
        tid = principal_id(t)
        if tid is None:
            continue
        try:
            n_class = class_of(t.base, *tid)
        except NotPreprojective:
            continue
        trace = dim_of_sequence(a, letters)
        if not trace.positive:
            continue
        s = validate_admissible(o, letters)
        sid = principal_id(s)
        assert sid is not None, letters
        m_class = class_of(o, *sid)
        assert multiplicity(m_class.sequence) == multiplicity(s)
        assert m_class.dim == trace.dim
        assert apply_functors(a, validate_admissible(o, (x1,)), m_class.dim) == n_class.dim
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("name", NAMES)
def test_direct_sum_shortest_is_join(name):
    o = catalog.quiver(name)
    a = cartan_matrix(o.graph)
    classes = enumerate_classes(o, 2)
    all_seqs = [validate_admissible(o, s) for s in enumerate_admissible(o, 7)]
    for c1, c2 in itertools.combinations(classes, 2):
        target = tuple(map(max, multiplicity(c1.sequence), multiplicity(c2.sequence)))
        if sum(target) > 7:
            continue
        killers = [
            multiplicity(s) for s in all_seqs
            if not any(apply_functors(a, s, c1.dim)) and not any(apply_functors(a, s, c2.dim))
        ]
        minimal = {m for m in killers
                   if not any(k != m and all(p <= q for p, q in zip(k, m)) for k in killers)}
        assert minimal == {target}


@pytest.mark.parametrize("name", NAMES)
def test_principal_sequences_injective_on_classes(name):
    o = catalog.quiver(name)
    seen = {}
    for r, x in itertools.product(range(1, 7), o.graph.vertices):
        try:
            c = class_of(o, r, x)
        except NotPreprojective:
            continue
        assert c.dim not in seen or seen[c.dim] == (r, x)
        seen[c.dim] = (r, x)
    assert principal_sequence(o, 1, 1) == class_of(o, 1, 1).sequence
