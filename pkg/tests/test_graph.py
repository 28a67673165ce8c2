import itertools

import pytest
from hypothesis import given, strategies as st

from orientedchi.graph import (
    GraphError,
    build_graph,
    build_oriented,
    enumerate_orientations,
    gen_basic,
    gen_hypercube,
    gen_k11n_oriented,
    orient,
    orientation_mask,
    random_orientation,
    underlying,
)


def test_build_k2():
    g = build_graph(2, [(0, 1)])
    assert (g.m, g.max_degree) == (1, 1)


def test_build_p4():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.max_degree == 2
    assert g.avg_degree == 1.5


@pytest.mark.parametrize(
    "edges, fragment",
    [
        ([(0, 1), (0, 1)], "duplicate edge"),
        ([(0, 1), (1, 0)], "duplicate edge"),
        ([(1, 1)], "self-loop"),
        ([(0, 3)], "outside"),
    ],
)
def test_build_graph_rejects(edges, fragment):
    with pytest.raises(GraphError, match=fragment):
        build_graph(3, edges)


def test_single_vertex_graph(single_vertex):
    g = single_vertex
    assert (g.n, g.m, g.max_degree, g.avg_degree) == (1, 0, 0, 0.0)


def test_build_oriented_examples():
    tri = build_oriented(3, [(0, 1), (1, 2), (2, 0)])
    assert tri.m == 3
    assert build_oriented(4, [(0, 1), (1, 2), (2, 3)]).out_degree(0) == 1
    with pytest.raises(GraphError, match="antiparallel"):
        build_oriented(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError, match="duplicate arc"):
        build_oriented(2, [(0, 1), (0, 1)])
    with pytest.raises(GraphError, match="self-loop"):
        build_oriented(2, [(1, 1)])


def test_underlying():
    tri = build_oriented(3, [(0, 1), (1, 2), (2, 0)])
    assert underlying(tri) == gen_basic("complete", 3)
    p4 = build_oriented(4, [(0, 1), (1, 2), (2, 3)])
    assert underlying(p4) == gen_basic("path", 4)
    empty = underlying(build_oriented(5, []))
    assert (empty.n, empty.m) == (5, 0)


def test_orient_examples():
    k2 = gen_basic("path", 2)
    assert orient(k2, [0]).arcs == ((0, 1),)
    assert orient(k2, [1]).arcs == ((1, 0),)
    c3 = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert set(orient(c3, [0, 1, 0]).arcs) == {(0, 1), (2, 0), (1, 2)}


def test_orient_int_mask_matches_bit_list():
    c3 = gen_basic("cycle", 3)
    for mask in range(8):
        bits = [(mask >> i) & 1 for i in range(3)]
        assert orient(c3, mask) == orient(c3, bits)


def test_orient_mask_length_mismatch():
    with pytest.raises(GraphError, match="length"):
        orient(gen_basic("path", 3), [0])
    with pytest.raises(GraphError, match="fit"):
        orient(gen_basic("path", 3), 4)


def test_edge_order_is_lexicographic():
    g = build_graph(4, [(3, 2), (0, 3), (1, 0), (2, 0)])
    assert g.edge_order == ((0, 1), (0, 2), (0, 3), (2, 3))


@pytest.mark.parametrize("kind, n, count", [("path", 2, 2), ("path", 3, 4), ("cycle", 5, 32)])
def test_enumerate_counts(kind, n, count):
    assert len(list(enumerate_orientations(gen_basic(kind, n)))) == count


def test_enumerate_refuses_large_m():
    with pytest.raises(GraphError, match="2\\^32"):
        enumerate_orientations(gen_hypercube(4), limit=24)


def test_enumerate_order_is_integer_mask_order():
    g = gen_basic("cycle", 4)
    for mask, D in enumerate(enumerate_orientations(g)):
        assert orientation_mask(g, D) == mask


def test_orientation_roundtrip_and_distinctness(corpus):
    for g in corpus.values():
        if g.m > 8:
            continue
        seen = set()
        for D in enumerate_orientations(g):
            assert underlying(D).edges == g.edges
            seen.add(D.arcs)
        assert len(seen) == 2**g.m


def test_random_orientation_deterministic():
    q3 = gen_hypercube(3)
    assert random_orientation(q3, 1) == random_orientation(q3, 1)
    assert underlying(random_orientation(q3, 2)) == q3
    k2 = gen_basic("path", 2)
    assert random_orientation(k2, 123).arcs in (((0, 1),), ((1, 0),))


def test_random_orientation_frozen_vector():
    # top bits of the first three SplitMix64(0) outputs are 1, 0, 0
    p4 = gen_basic("path", 4)
    assert random_orientation(p4, 0) == orient(p4, [1, 0, 0])


def test_hypercube_examples():
    assert gen_hypercube(1) == gen_basic("path", 2)
    q3 = gen_hypercube(3)
    assert (q3.n, q3.m, q3.max_degree, q3.is_regular()) == (8, 12, 3, True)
    q10 = gen_hypercube(10)
    assert (q10.n, q10.m) == (1024, 10 * 2**9)
    assert q10.avg_degree == 10.0


@pytest.mark.parametrize("d", range(1, 7))
def test_hypercube_structure(d):
    q = gen_hypercube(d)
    assert all(q.degree(v) == d for v in range(q.n))
    for u, v in q.edges:
        assert bin(u ^ v).count("1") == 1


@pytest.mark.parametrize("d", [0, 21])
def test_hypercube_range(d):
    with pytest.raises(GraphError):
        gen_hypercube(d)


def test_basic_examples():
    assert gen_basic("complete", 3).m == 3
    assert gen_basic("cycle", 5).m == 5
    star = gen_basic("star", 4)
    assert star.max_degree == 3
    assert gen_basic("path", 1).m == 0
    with pytest.raises(GraphError):
        gen_basic("cycle", 2)
    with pytest.raises(GraphError):
        gen_basic("wheel", 5)


def test_k11n():
    d3 = gen_k11n_oriented(3)
    assert (d3.n, d3.m) == (5, 7)
    d2 = gen_k11n_oriented(2)
    assert (d2.n, d2.m) == (4, 5)
    with pytest.raises(GraphError):
        gen_k11n_oriented(1)


def test_handshake(corpus):
    graphs = list(corpus.values()) + [gen_hypercube(d) for d in range(1, 6)]
    for g in graphs:
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


edge_sets = st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.sampled_from([(0, 0)] + list(itertools.combinations(range(n), 2)))))
)


@given(edge_sets)
def test_orient_underlying_identity(data):
    n, edges = data
    g = build_graph(n, [e for e in edges if e != (0, 0)])
    for mask in range(min(2**g.m, 16)):
        assert underlying(orient(g, mask)) == g
