"""Bitset graph type, constructors and structure predicates."""

import numpy as np
import pytest

from specgap import graphs
from specgap.graphs import (
    Graph,
    InvalidParamsError,
    bipartition,
    complete,
    complete_multipartite,
    construct,
    cycle,
    detect_complete_multipartite,
    from_edges,
    is_connected,
    kmm_minus_e,
    kmm_plus_e,
    pair_count,
    pair_index,
    path,
    relabel,
    star,
)


def test_pair_indexing():
    assert pair_count(1) == 0
    assert pair_count(4) == 6
    assert pair_index(0, 1) == 0
    assert pair_index(0, 2) == 1
    assert pair_index(1, 2) == 2
    assert pair_index(2, 3) == 5
    # strict upper triangle, column major: all indices hit exactly once
    seen = {pair_index(i, j) for j in range(5) for i in range(j)}
    assert seen == set(range(pair_count(5)))


def test_graph_basics():
    g = from_edges(3, [(0, 1), (2, 1)])
    assert g.order == 3
    assert g.edge_count == 2
    assert g.has_edge(1, 0) and g.has_edge(1, 2)
    assert not g.has_edge(0, 2)
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    assert g.degrees() == [1, 2, 1]


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(0, 0)
    with pytest.raises(ValueError):
        Graph(2, 2)  # only one pair bit exists for order 2
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(2, [(-1, 0)])


def test_adjacency_matrix():
    a = path(3).adjacency()
    expect = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)
    assert np.array_equal(a, expect)
    assert a.dtype == np.float64


def test_complement():
    g = path(4)
    h = g.complement()
    assert h.edge_count == pair_count(4) - g.edge_count
    assert g.complement().complement() == g
    assert complete(5).complement().edge_count == 0


def test_families():
    assert complete(4).edge_count == 6
    assert path(5).edge_count == 4
    assert cycle(5).edge_count == 5
    assert star(5).edge_count == 4
    assert star(5).degrees() == [4, 1, 1, 1, 1]
    assert cycle(4).degrees() == [2, 2, 2, 2]
    # complete bipartite via the multipartite constructor
    g = complete_multipartite([2, 3])
    assert g.order == 5
    assert g.edge_count == 6
    assert sorted(g.degrees()) == [2, 2, 2, 3, 3]


def test_family_validation():
    with pytest.raises(InvalidParamsError):
        cycle(2)
    with pytest.raises(InvalidParamsError):
        complete(0)
    with pytest.raises(InvalidParamsError):
        complete_multipartite([5])
    with pytest.raises(InvalidParamsError):
        complete_multipartite([2, 0])
    with pytest.raises(InvalidParamsError):
        kmm_minus_e(1)
    with pytest.raises(InvalidParamsError):
        construct("no_such_family", [3])


def test_construct_dispatch():
    assert construct("complete", [4]) == complete(4)
    assert construct("cycle", [6]) == cycle(6)
    assert construct("complete_multipartite", [1, 2, 3]) == \
        complete_multipartite([1, 2, 3])
    assert construct("kmm_plus_e", [3]) == kmm_plus_e(3)


def test_kmm_minus_e_shape():
    # removing one edge from K_{2,2} leaves a path on four vertices
    g = kmm_minus_e(2)
    assert g.order == 4 and g.edge_count == 3
    assert sorted(g.degrees()) == [1, 1, 2, 2]
    g = kmm_minus_e(3)
    assert g.order == 6 and g.edge_count == 8
    assert sorted(g.degrees()) == [2, 2, 3, 3, 3, 3]


def test_kmm_plus_e_shape():
    # adding one edge inside a side of K_{2,2} gives the diamond
    g = kmm_plus_e(2)
    assert g.order == 4 and g.edge_count == 5
    assert sorted(g.degrees()) == [2, 2, 3, 3]
    g = kmm_plus_e(4)
    assert g.order == 8 and g.edge_count == 17


def test_relabel_preserves_structure():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    h = relabel(g, [2, 0, 3, 1])
    assert h.edge_count == g.edge_count
    assert sorted(h.degrees()) == sorted(g.degrees())
    with pytest.raises(ValueError):
        relabel(g, [0, 1, 1, 2])


def test_is_connected():
    assert is_connected(Graph(1, 0))
    assert is_connected(path(7))
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))
    assert not is_connected(from_edges(3, [(0, 1)]))
    assert is_connected(complete(6))


def test_bipartition():
    sides = bipartition(path(4))
    assert sides is not None
    assert set(sides[0]) | set(sides[1]) == {0, 1, 2, 3}
    assert 0 in sides[0]
    assert bipartition(complete(3)) is None
    assert bipartition(cycle(6)) is not None
    assert bipartition(cycle(5)) is None
    # disconnected graphs are rejected even when 2-colorable
    assert bipartition(from_edges(4, [(0, 1), (2, 3)])) is None


def test_detect_complete_multipartite():
    assert detect_complete_multipartite(complete_multipartite([1, 2, 3])) \
        == (1, 2, 3)
    assert detect_complete_multipartite(cycle(4)) == (2, 2)
    assert detect_complete_multipartite(star(5)) == (1, 4)
    assert detect_complete_multipartite(complete(4)) == (1, 1, 1, 1)
    assert detect_complete_multipartite(path(4)) is None
    assert detect_complete_multipartite(cycle(6)) is None


def test_detect_round_trip():
    from specgap.verify import partitions

    for total in range(2, 9):
        for parts in partitions(total):
            g = complete_multipartite(parts)
            assert detect_complete_multipartite(g) == tuple(sorted(parts))


def test_neighbor_masks():
    g = cycle(4)
    masks = g.neighbor_masks()
    assert masks[0] == (1 << 1) | (1 << 3)
    assert masks[2] == (1 << 1) | (1 << 3)
