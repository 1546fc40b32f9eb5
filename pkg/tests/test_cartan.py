import itertools

import pytest

from valquiver import catalog
from valquiver.cartan import (
    CartanMatrix,
    cartan_matrix,
    graph_of,
    is_finite_type,
    leading_minors,
    symmetrizer,
    validate_graph,
)
from valquiver.errors import (
    AsymmetricZero,
    Disconnected,
    DuplicateEdge,
    LoopEdge,
    NoSymmetrizer,
    RankOne,
    VertexOutOfRange,
)
from valquiver.oracles import bfs_lengths


def test_validate_a2():
    g = validate_graph(2, [(1, 2, 1, 1)])
    assert g.edges == ((1, 2),)
    assert g.value(1, 2) == g.value(2, 1) == 1


def test_validate_b2_symmetrizer():
    g = validate_graph(2, [(1, 2, 2, 1)])
    assert symmetrizer(g).d == (1, 2)


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (2, [(1, 2, 2, 0)], AsymmetricZero),
        (2, [(1, 2, 0, 0)], AsymmetricZero),
        (1, [], RankOne),
        (0, [], RankOne),
        (3, [(1, 2, 1, 1)], Disconnected),
        (2, [(1, 1, 1, 1)], LoopEdge),
        (2, [(1, 2, 1, 1), (2, 1, 1, 1)], DuplicateEdge),
        (2, [(1, 3, 1, 1)], VertexOutOfRange),
        # triangle whose ratios multiply to 2 around the cycle
        (3, [(1, 2, 2, 1), (2, 3, 1, 1), (1, 3, 1, 1)], NoSymmetrizer),
    ],
)
def test_validate_errors(n, edges, exc):
    with pytest.raises(exc):
        validate_graph(n, edges)


@pytest.mark.parametrize(
    "edges, d",
    [
        ([(1, 2, 1, 1)], (1, 1)),
        ([(1, 2, 2, 1)], (1, 2)),
        ([(1, 2, 3, 1)], (1, 3)),
        ([(1, 2, 4, 6)], (3, 2)),
    ],
)
def test_symmetrizer_values(edges, d):
    assert symmetrizer(validate_graph(2, edges)).d == d


def test_cartan_matrices():
    assert cartan_matrix(catalog.graph("A2")).a == ((2, -1), (-1, 2))
    assert cartan_matrix(catalog.graph("kronecker")).a == ((2, -2), (-2, 2))
    assert cartan_matrix(catalog.graph("B2")).a == ((2, -2), (-1, 2))


@pytest.mark.parametrize("name", catalog.graph_names(4))
def test_symmetrizer_exhaustive(name):
    g = catalog.graph(name)
    d = symmetrizer(g)
    a = cartan_matrix(g)
    for i, j in itertools.product(g.vertices, repeat=2):
        assert d[i] * g.value(i, j) == d[j] * g.value(j, i)
        assert d[i] * a.entry(i, j) == d[j] * a.entry(j, i)
    assert graph_of(a) == g


def test_from_rows_roundtrip():
    a = CartanMatrix.from_rows([[2, -3], [-1, 2]])
    assert graph_of(a).value(1, 2) == 3


def test_leading_minors_exact():
    assert leading_minors([[2, -1], [-1, 2]]) == [2, 3]
    assert leading_minors([[2, -2], [-2, 2]]) == [2, 0]
    assert leading_minors([[0, 1], [1, 0]]) == [0, -1]


@pytest.mark.parametrize(
    "edges, finite",
    [([(1, 2, 1, 1)], True), ([(1, 2, 2, 2)], False), ([(1, 2, 2, 1)], True)],
)
def test_finite_type_examples(edges, finite):
    assert is_finite_type(validate_graph(2, edges)) is finite


@pytest.mark.parametrize("name", catalog.graph_names(3))
def test_finite_type_matches_bfs(name):
    g = catalog.graph(name)
    assert is_finite_type(g) == bfs_lengths(cartan_matrix(g), 2000).finite
