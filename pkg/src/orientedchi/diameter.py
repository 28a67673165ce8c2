"""Pair-diameter of oriented graphs, ocliques and the dense oclique family.

The pair-diameter treats each unordered pair ``{u, v}`` by the shorter of
the two directed distances. An oriented graph of pair-diameter at most 2 is
an *oclique*: every two vertices are adjacent or are the ends of a directed
2-path, so every oriented colouring must separate them and ``chi_o(D) = n``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import GraphError, OrientedGraph, UndirectedGraph, build_oriented, underlying

INF = math.inf


@dataclass(frozen=True)
class DiameterReport:
    value: float  # an int, or math.inf when some pair is disconnected both ways
    witness_pair: tuple[int, int] | None

    def as_dict(self) -> dict:
        return {
            "value": None if self.value == INF else int(self.value),
            "witness_pair": list(self.witness_pair) if self.witness_pair else None,
        }


def _bfs(adj, source: int, n: int) -> list[float]:
    dist: list[float] = [INF] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def directed_distances(D: OrientedGraph) -> list[list[float]]:
    return [_bfs(D.out_adj, s, D.n) for s in range(D.n)]


def pair_diameter(D: OrientedGraph) -> DiameterReport:
    if D.n <= 1:
        return DiameterReport(0, None)
    dist = directed_distances(D)
    best: float = -1
    witness = None
    for u, v in combinations(range(D.n), 2):
        d = min(dist[u][v], dist[v][u])
        if d > best:
            best, witness = d, (u, v)
    return DiameterReport(best, witness)


def is_oclique(D: OrientedGraph) -> bool:
    return pair_diameter(D).value <= 2


def undirected_diameter(G: UndirectedGraph) -> float:
    if G.n <= 1:
        return 0
    return max(max(_bfs(G.adj, s, G.n)) for s in range(G.n))


def moore_check(G: UndirectedGraph) -> bool:
    """Whether ``max_degree >= sqrt(n - 1)`` when ``G`` has diameter <= 2.

    Vacuously true for larger diameter. Never false for a correct graph.
    """
    if undirected_diameter(G) > 2:
        return True
    return G.max_degree**2 >= G.n - 1


# -- dense oclique family on pairs (i, j), 1 <= i < j <= p ------------------


def lemma2_labels(p: int) -> list[tuple[int, int]]:
    """Vertex index -> pair label, pairs in lexicographic order."""
    return [(i, j) for i in range(1, p + 1) for j in range(i + 1, p + 1)]


def lemma2_arcs(p: int) -> list[tuple[tuple[int, int], tuple[int, int], str]]:
    """All arcs as (tail label, head label, rule letter)."""
    arcs = []
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            for k in range(j + 1, p + 1):
                arcs.append(((i, j), (i, k), "a"))  # i < j < k
            for k in range(i + 1, j):
                arcs.append(((i, j), (k, j), "b"))  # i < k < j
            for k in range(1, i):
                arcs.append(((i, j), (k, i), "c"))  # k < i < j
    return arcs


def lemma2_digraph(p: int) -> OrientedGraph:
    """Oriented graph on the 2-subsets of ``{1..p}`` with pair-diameter <= 2.

    Arcs: ``(i,j) -> (i,k)`` for ``i<j<k``; ``(i,j) -> (k,j)`` for
    ``i<k<j``; ``(i,j) -> (k,i)`` for ``k<i<j``. It is ``2(p-2)``-regular on
    ``n = p(p-1)/2`` vertices, so its degree is ``sqrt(8n+1) - 3``.
    """
    if p < 3:
        raise GraphError(f"construction needs p >= 3, got {p}")
    index = {lab: t for t, lab in enumerate(lemma2_labels(p))}
    return build_oriented(len(index), [(index[a], index[b]) for a, b, _ in lemma2_arcs(p)])


@dataclass
class Clause:
    name: str
    passed: bool
    detail: str


@dataclass
class Lemma2Report:
    p: int
    n: int
    max_degree: int
    clauses: list[Clause] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def failed(self) -> list[Clause]:
        return [c for c in self.clauses if not c.passed]

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "clauses": [vars(c) for c in self.clauses],
        }


def _forced_distinct_witness(D: OrientedGraph) -> tuple[int, int] | None:
    """A pair neither adjacent nor joined by a directed 2-path, if any.

    Such pairs are the only ones an oriented colouring may merge, so
    ``None`` means every oriented colouring uses ``n`` colours. Checked
    directly from arcs, independently of the BFS distance code.
    """
    for u, v in combinations(range(D.n), 2):
        if D.has_arc(u, v) or D.has_arc(v, u):
            continue
        if D.out_adj[u] & D.in_adj[v] or D.out_adj[v] & D.in_adj[u]:
            continue
        return (u, v)
    return None


def verify_lemma2(p: int) -> Lemma2Report:
    """Check every claim about :func:`lemma2_digraph` for this ``p``."""
    if p < 3:
        raise GraphError(f"construction needs p >= 3, got {p}")
    labels = lemma2_labels(p)
    n = len(labels)

    # built without the OrientedGraph guard so the antiparallel check can report
    raw = {(a, b) for a, b, _ in lemma2_arcs(p)}
    reversed_pairs = sorted((a, b) for a, b in raw if (b, a) in raw)
    clauses = [
        Clause(
            "oriented",
            not reversed_pairs,
            "no self-loop, duplicate or antiparallel arc"
            if not reversed_pairs
            else f"antiparallel pair {reversed_pairs[0]}",
        )
    ]
    if reversed_pairs:
        return Lemma2Report(p, n, -1, clauses)

    D = lemma2_digraph(p)
    bad = [v for v in range(n) if D.out_degree(v) != p - 2 or D.in_degree(v) != p - 2]
    clauses.append(
        Clause(
            "regular",
            not bad,
            f"in-degree = out-degree = {p - 2} at all {n} vertices"
            if not bad
            else f"vertex {labels[bad[0]]} has out {D.out_degree(bad[0])}, in {D.in_degree(bad[0])}",
        )
    )

    G = underlying(D)
    delta = G.max_degree
    root = math.isqrt(8 * n + 1)
    exact_square = root * root == 8 * n + 1
    ok = G.is_regular() and delta == 2 * (p - 2) and exact_square and delta == root - 3
    clauses.append(
        Clause(
            "degree_formula",
            ok,
            f"max degree {delta} = 2(p-2) = sqrt(8n+1) - 3 = sqrt({8 * n + 1}) - 3",
        )
    )

    rep = pair_diameter(D)
    clauses.append(
        Clause(
            "diameter",
            rep.value <= 2,
            f"pair-diameter {rep.value}, attained at "
            f"{tuple(labels[x] for x in rep.witness_pair) if rep.witness_pair else None}",
        )
    )

    loose = _forced_distinct_witness(D)
    clauses.append(
        Clause(
            "chi_equals_n",
            loose is None,
            f"every pair adjacent or 2-path linked, so chi_o(D) = n = {n}"
            if loose is None
            else f"pair {labels[loose[0]]}, {labels[loose[1]]} may share a colour",
        )
    )

    # n > delta * sqrt(n / 8)  <=>  8n > delta^2 for n > 0
    clauses.append(
        Clause(
            "tightness",
            8 * n > delta * delta,
            f"n = {n} > max_degree * sqrt(n/8) = {delta * math.sqrt(n / 8):.6g}",
        )
    )
    return Lemma2Report(p, n, delta, clauses)
