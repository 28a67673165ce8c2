import math
import random

import pytest

from oracles import floyd_pair_diameter
from orientedchi.diameter import (
    is_oclique,
    lemma2_digraph,
    lemma2_labels,
    moore_check,
    pair_diameter,
    verify_lemma2,
)
from orientedchi.graph import (
    GraphError,
    build_graph,
    build_oriented,
    enumerate_orientations,
    gen_basic,
    gen_hypercube,
    gen_k11n_oriented,
    random_orientation,
    underlying,
)

TRI = build_oriented(3, [(0, 1), (1, 2), (2, 0)])
DP3 = build_oriented(3, [(0, 1), (1, 2)])
DP4 = build_oriented(4, [(0, 1), (1, 2), (2, 3)])
CYC5 = build_oriented(5, [(i, (i + 1) % 5) for i in range(5)])


def test_pair_diameter_examples():
    assert pair_diameter(TRI).value == 1
    rep = pair_diameter(DP3)
    assert (rep.value, rep.witness_pair) == (2, (0, 2))
    assert pair_diameter(lemma2_digraph(4)).value == 2


def test_single_vertex_and_disconnected():
    one = build_oriented(1, [])
    assert pair_diameter(one).value == 0
    assert pair_diameter(one).witness_pair is None
    assert is_oclique(one)
    assert pair_diameter(build_oriented(3, [(0, 1)])).value == math.inf
    assert pair_diameter(build_oriented(3, [(0, 1)])).as_dict()["value"] is None


def test_is_oclique_examples():
    assert floyd_pair_diameter(5, CYC5.arcs) <= 2
    assert is_oclique(CYC5)
    assert not is_oclique(DP4)
    assert pair_diameter(DP4).witness_pair == (0, 3)
    assert not is_oclique(gen_k11n_oriented(3))


def test_k11n_diameter_three():
    d = gen_k11n_oriented(3)
    assert floyd_pair_diameter(d.n, d.arcs) == 3
    assert pair_diameter(d).value == 3


def test_matches_floyd_on_corpus(corpus):
    for g in corpus.values():
        for D in enumerate_orientations(g):
            assert pair_diameter(D).value == floyd_pair_diameter(D.n, D.arcs)


def test_matches_floyd_on_random_orientations():
    rng = random.Random(5)
    for trial in range(40):
        n = rng.randint(2, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        if not edges:
            continue
        D = random_orientation(build_graph(n, edges), trial)
        assert pair_diameter(D).value == floyd_pair_diameter(n, D.arcs)


def test_relabelling_invariance():
    rng = random.Random(11)
    for p in (4, 5):
        D = lemma2_digraph(p)
        for _ in range(5):
            perm = list(range(D.n))
            rng.shuffle(perm)
            assert pair_diameter(D.relabel(perm)).value == pair_diameter(D).value
    D = random_orientation(gen_hypercube(3), 4)
    perm = list(range(8))
    rng.shuffle(perm)
    assert pair_diameter(D.relabel(perm)).value == pair_diameter(D).value


def test_lemma2_small_cases():
    d4 = lemma2_digraph(4)
    assert (d4.n, d4.m) == (6, 12)
    assert all(d4.in_degree(v) == d4.out_degree(v) == 2 for v in range(6))
    d5 = lemma2_digraph(5)
    assert underlying(d5).max_degree == 6 == math.isqrt(81) - 3


def test_lemma2_p4_non_edges():
    # brute force over all label pairs: arcs only join pairs sharing a coordinate
    labels = lemma2_labels(4)
    g = underlying(lemma2_digraph(4))
    missing = {
        frozenset((labels[u], labels[v]))
        for u in range(6) for v in range(u + 1, 6) if not g.has_edge(u, v)
    }
    assert missing == {
        frozenset({(1, 2), (3, 4)}),
        frozenset({(1, 3), (2, 4)}),
        frozenset({(1, 4), (2, 3)}),
    }


@pytest.mark.parametrize("p", range(3, 13))
def test_lemma2_structure(p):
    D = lemma2_digraph(p)
    arcs = set(D.arcs)
    assert not any((v, u) in arcs for u, v in arcs)
    assert all(D.in_degree(v) == D.out_degree(v) == p - 2 for v in range(D.n))
    expected = 1 if p == 3 else 2  # p = 3 gives the cyclic triangle
    assert pair_diameter(D).value == expected


def test_lemma2_rejects_small_p():
    with pytest.raises(GraphError):
        lemma2_digraph(2)
    with pytest.raises(GraphError):
        verify_lemma2(2)


@pytest.mark.parametrize("p, n, delta", [(4, 6, 4), (6, 15, 8), (12, 66, 20)])
def test_verify_lemma2_examples(p, n, delta):
    rep = verify_lemma2(p)
    assert rep.passed, rep.failed()
    assert (rep.n, rep.max_degree) == (n, delta)
    assert [c.name for c in rep.clauses] == [
        "oriented", "regular", "degree_formula", "diameter", "chi_equals_n", "tightness",
    ]
    assert delta * math.sqrt(n / 8) < n


def test_moore_examples():
    c5 = gen_basic("cycle", 5)
    assert moore_check(c5) and c5.max_degree**2 == c5.n - 1
    assert moore_check(gen_basic("complete", 4))
    assert moore_check(underlying(lemma2_digraph(4)))
    assert moore_check(gen_basic("path", 1))


def test_moore_never_false(corpus):
    graphs = list(corpus.values()) + [gen_hypercube(d) for d in range(1, 6)]
    graphs += [underlying(lemma2_digraph(p)) for p in range(3, 9)]
    graphs += [gen_basic("star", n) for n in range(2, 10)]
    assert all(moore_check(g) for g in graphs)
