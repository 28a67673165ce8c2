"""Oriented and harmonious colourings: checkers, greedy heuristics, exact search.

An oriented colouring of ``D`` is a proper colouring of its underlying graph
in which, for any two colour classes, all arcs between them point the same
way. Two consequences drive the solvers:

* the ends of a directed 2-path ``u -> w -> v`` need different colours;
* for each ordered pair of colours only one direction may ever be used.

The exact solver runs iterative deepening on the number of colours and
backtracks in saturation order, keeping a count of arcs per ordered colour
pair so a conflicting arc is detected in constant time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import MAX_ENUM_EDGES, GraphError, OrientedGraph, UndirectedGraph, enumerate_orientations
from .rng import SplitMix64

DEFAULT_BUDGET = 10**7
HARMONIOUS_MAX_N = 12


@dataclass(frozen=True)
class Colouring:
    """Vertex -> colour index; colours are exactly ``0..k-1``."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        used = set(self.assignment)
        if used != set(range(len(used))):
            raise ValueError(f"colours must be contiguous from 0, got {sorted(used)}")

    @property
    def k(self) -> int:
        return len(set(self.assignment))

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    @classmethod
    def normalized(cls, colours: Sequence[int]) -> Colouring:
        """Relabel colours by first appearance."""
        relabel: dict[int, int] = {}
        return cls(tuple(relabel.setdefault(c, len(relabel)) for c in colours))


@dataclass
class SearchResult:
    """Outcome of a colouring search.

    ``value`` is the best value with a witness. When ``completed`` is false
    the budget ran out and only ``lower <= optimum <= value`` is certified
    (for graph-level maximisation, ``value`` is the best certified lower).
    """

    value: int
    witness: Colouring | None
    completed: bool
    lower: int
    nodes: int = 0
    elapsed: float = 0.0
    mask: int | None = None
    stats: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "completed": self.completed,
            "lower": self.lower,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
            "mask": self.mask,
            "witness": list(self.witness.assignment) if self.witness else None,
        }


class BudgetExhausted(Exception):
    pass


def _as_tuple(c: Colouring | Sequence[int], n: int) -> tuple[int, ...]:
    colours = c.assignment if isinstance(c, Colouring) else tuple(c)
    if len(colours) != n:
        raise ValueError(f"colouring covers {len(colours)} vertices, graph has {n}")
    return colours


# -- checkers -----------------------------------------------------------------


def is_oriented_colouring(D: OrientedGraph, c: Colouring | Sequence[int]) -> bool:
    col = _as_tuple(c, D.n)
    direction: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v in D.arcs:
        a, b = col[u], col[v]
        if a == b:
            return False
        key = (min(a, b), max(a, b))
        if direction.setdefault(key, (a, b)) != (a, b):
            return False
    return True


def is_proper(G: UndirectedGraph, c: Colouring | Sequence[int]) -> bool:
    col = _as_tuple(c, G.n)
    return all(col[u] != col[v] for u, v in G.edges)


def is_harmonious(G: UndirectedGraph, c: Colouring | Sequence[int]) -> bool:
    col = _as_tuple(c, G.n)
    seen: set[tuple[int, int]] = set()
    for u, v in G.edges:
        a, b = col[u], col[v]
        if a == b:
            return False
        key = (min(a, b), max(a, b))
        if key in seen:
            return False
        seen.add(key)
    return True


# -- oriented colouring search --------------------------------------------------


def separation_sets(D: OrientedGraph) -> list[set[int]]:
    """For each vertex, the vertices it can never share a colour with."""
    sep = [set(D.out_adj[v] | D.in_adj[v]) for v in range(D.n)]
    for w in range(D.n):
        for u in D.in_adj[w]:
            for v in D.out_adj[w]:
                sep[u].add(v)
                sep[v].add(u)
    return sep


def oriented_clique_lower(D: OrientedGraph, sep: list[set[int]] | None = None) -> int:
    """Size of a greedily grown set of pairwise-separated vertices.

    Every such set is rainbow in any oriented colouring. Greedy starts from
    every vertex when ``n <= 64``, otherwise from the 16 highest-degree ones.
    """
    if D.n == 0:
        return 0
    sep = separation_sets(D) if sep is None else sep
    order = sorted(range(D.n), key=lambda v: (-len(sep[v]), v))
    starts = order if D.n <= 64 else order[:16]
    best = 1
    for s in starts:
        clique = [s]
        cand = sep[s]
        for v in order:
            if v in cand:
                clique.append(v)
                cand = cand & sep[v]
        best = max(best, len(clique))
    return best


class _OrientedSearch:
    def __init__(self, D: OrientedGraph, budget: int) -> None:
        self.n = D.n
        self.out = [sorted(D.out_adj[v]) for v in range(D.n)]
        self.inc = [sorted(D.in_adj[v]) for v in range(D.n)]
        self.sep = separation_sets(D)
        self.degree = [len(self.out[v]) + len(self.inc[v]) for v in range(D.n)]
        self.budget = budget
        self.nodes = 0

    def _candidates(self, v: int, col: list[int], fwd: list[list[int]], used: int, k: int) -> list[int]:
        forbidden = {col[w] for w in self.sep[v] if col[w] >= 0}
        for w in self.out[v]:
            b = col[w]
            if b >= 0:
                row = fwd[b]
                forbidden.update(a for a in range(used) if row[a])
        for w in self.inc[v]:
            b = col[w]
            if b >= 0:
                forbidden.update(a for a in range(used) if fwd[a][b])
        cand = [a for a in range(used) if a not in forbidden]
        if used < k:
            cand.append(used)
        return cand

    def colour(self, k: int) -> list[int] | None:
        n = self.n
        col = [-1] * n
        fwd = [[0] * k for _ in range(k)]

        def assign(v: int, a: int, step: int) -> None:
            for w in self.out[v]:
                if col[w] >= 0:
                    fwd[a][col[w]] += step
            for w in self.inc[v]:
                if col[w] >= 0:
                    fwd[col[w]][a] += step

        def rec(done: int, used: int) -> bool:
            if done == n:
                return True
            best_v, best_cand = -1, None
            for v in range(n):
                if col[v] >= 0:
                    continue
                cand = self._candidates(v, col, fwd, used, k)
                if not cand:
                    return False
                if (
                    best_cand is None
                    or len(cand) < len(best_cand)
                    or (len(cand) == len(best_cand) and self.degree[v] > self.degree[best_v])
                ):
                    best_v, best_cand = v, cand
            for a in best_cand:
                self.nodes += 1
                if self.nodes > self.budget:
                    raise BudgetExhausted
                col[best_v] = a
                assign(best_v, a, 1)
                if rec(done + 1, max(used, a + 1)):
                    return True
                assign(best_v, a, -1)
                col[best_v] = -1
            return False

        return list(col) if rec(0, 0) else None


def _greedy_oriented(D: OrientedGraph, order: Sequence[int], sep: list[set[int]]) -> list[int]:
    col = [-1] * D.n
    fwd: dict[tuple[int, int], int] = {}
    used = 0
    for v in order:
        forbidden = {col[w] for w in sep[v] if col[w] >= 0}
        outs = [col[w] for w in D.out_adj[v] if col[w] >= 0]
        ins = [col[w] for w in D.in_adj[v] if col[w] >= 0]
        for a in range(used):
            if a in forbidden:
                continue
            if any((b, a) in fwd for b in outs) or any((a, b) in fwd for b in ins):
                continue
            break
        else:
            a = used
            used += 1
        col[v] = a
        for b in outs:
            fwd[(a, b)] = 1
        for b in ins:
            fwd[(b, a)] = 1
    return col


def ochi_heuristic(D: OrientedGraph, seed: int = 0) -> SearchResult:
    """Greedy oriented colouring over a seeded random vertex order."""
    start = time.perf_counter()
    order = list(range(D.n))
    SplitMix64(seed).shuffle(order)
    col = _greedy_oriented(D, order, separation_sets(D))
    witness = Colouring.normalized(col)
    return SearchResult(
        value=witness.k,
        witness=witness,
        completed=False,
        lower=1 if D.n else 0,
        nodes=D.n,
        elapsed=time.perf_counter() - start,
    )


def ochi_exact(D: OrientedGraph, budget: int = DEFAULT_BUDGET, seed: int = 0) -> SearchResult:
    """Minimum number of colours in an oriented colouring of ``D``."""
    start = time.perf_counter()
    search = _OrientedSearch(D, budget)
    lower = oriented_clique_lower(D, search.sep)

    by_degree = sorted(range(D.n), key=lambda v: (-search.degree[v], v))
    candidates = [
        Colouring.normalized(_greedy_oriented(D, by_degree, search.sep)),
        ochi_heuristic(D, seed).witness,
    ]
    best = min(candidates, key=lambda c: c.k)
    k = lower
    try:
        while k < best.k:
            found = search.colour(k)
            if found is not None:
                best = Colouring.normalized(found)
                break
            k += 1
    except BudgetExhausted:
        return SearchResult(best.k, best, False, k, search.nodes, time.perf_counter() - start)
    return SearchResult(best.k, best, True, best.k, search.nodes, time.perf_counter() - start)


def ochi_graph_exact(
    G: UndirectedGraph,
    budget: int = DEFAULT_BUDGET,
    limit: int = MAX_ENUM_EDGES,
    seed: int = 0,
) -> SearchResult:
    """Maximum of ``ochi_exact`` over every orientation of ``G``.

    An orientation whose greedy colouring already uses no more colours than
    the current maximum cannot raise it, so it is skipped without search.
    """
    start = time.perf_counter()
    best: SearchResult | None = None
    nodes = 0
    solved = skipped = 0
    completed = True
    for mask, D in enumerate(enumerate_orientations(G, limit)):
        if best is not None:
            quick = ochi_heuristic(D, seed)
            if quick.value <= best.value:
                skipped += 1
                continue
        res = ochi_exact(D, budget - nodes, seed)
        nodes += res.nodes
        solved += 1
        if not res.completed:
            completed = False
            break
        if best is None or res.value > best.value:
            best = res
            best.mask = mask
        if best.value == G.n:
            break
    assert best is not None
    stats = {"orientations_solved": solved, "orientations_skipped": skipped}
    return SearchResult(
        best.value, best.witness, completed, best.value, nodes,
        time.perf_counter() - start, best.mask, stats,
    )


# -- harmonious colouring ---------------------------------------------------------


def _distance2_sets(G: UndirectedGraph) -> list[set[int]]:
    near = [set(G.adj[v]) for v in range(G.n)]
    for w in range(G.n):
        for u, v in combinations(G.adj[w], 2):
            near[u].add(v)
            near[v].add(u)
    return near


def harmonious_greedy(G: UndirectedGraph, seed: int = 0) -> SearchResult:
    """Greedy harmonious colouring over a seeded random vertex order.

    Vertices within distance 2 get distinct colours, so a fresh colour is
    always admissible and the greedy never gets stuck.
    """
    start = time.perf_counter()
    order = list(range(G.n))
    SplitMix64(seed).shuffle(order)
    near = _distance2_sets(G)
    col = [-1] * G.n
    pairs: set[tuple[int, int]] = set()
    used = 0
    for v in order:
        taken = {col[w] for w in near[v] if col[w] >= 0}
        nbr_cols = [col[w] for w in G.adj[v] if col[w] >= 0]
        for a in range(used):
            if a not in taken and not any((min(a, b), max(a, b)) in pairs for b in nbr_cols):
                break
        else:
            a = used
            used += 1
        col[v] = a
        pairs.update((min(a, b), max(a, b)) for b in nbr_cols)
    witness = Colouring.normalized(col)
    return SearchResult(witness.k, witness, False, 1, G.n, time.perf_counter() - start)


def harmonious_lower(G: UndirectedGraph) -> int:
    """max(max_degree + 1, least k with C(k, 2) >= m)."""
    k = 1
    while k * (k - 1) // 2 < G.m:
        k += 1
    return max(G.max_degree + 1, k)


def harmonious_exact(
    G: UndirectedGraph, budget: int = DEFAULT_BUDGET, max_n: int = HARMONIOUS_MAX_N
) -> SearchResult:
    if G.n > max_n:
        raise GraphError(f"exact harmonious search is limited to n <= {max_n}, got n={G.n}")
    start = time.perf_counter()
    n = G.n
    near = _distance2_sets(G)
    adj = [sorted(G.adj[v]) for v in range(n)]
    best = harmonious_greedy(G).witness
    assert best is not None
    nodes = 0

    def attempt(k: int) -> list[int] | None:
        col = [-1] * n
        pairs: set[tuple[int, int]] = set()

        def cands(v: int, used: int) -> list[int]:
            taken = {col[w] for w in near[v] if col[w] >= 0}
            nb = [col[w] for w in adj[v] if col[w] >= 0]
            out = [
                a for a in range(used)
                if a not in taken and not any((min(a, b), max(a, b)) in pairs for b in nb)
            ]
            if used < k:
                out.append(used)
            return out

        def rec(done: int, used: int) -> bool:
            nonlocal nodes
            if done == n:
                return True
            best_v, best_c = -1, None
            for v in range(n):
                if col[v] < 0:
                    c = cands(v, used)
                    if not c:
                        return False
                    if best_c is None or len(c) < len(best_c) or (
                        len(c) == len(best_c) and len(adj[v]) > len(adj[best_v])
                    ):
                        best_v, best_c = v, c
            for a in best_c:
                nodes += 1
                if nodes > budget:
                    raise BudgetExhausted
                new = [(min(a, col[w]), max(a, col[w])) for w in adj[best_v] if col[w] >= 0]
                col[best_v] = a
                pairs.update(new)
                if rec(done + 1, max(used, a + 1)):
                    return True
                pairs.difference_update(new)
                col[best_v] = -1
            return False

        return col if rec(0, 0) else None

    k = harmonious_lower(G)
    try:
        while k < best.k:
            found = attempt(k)
            if found is not None:
                best = Colouring.normalized(found)
                break
            k += 1
    except BudgetExhausted:
        return SearchResult(best.k, best, False, k, nodes, time.perf_counter() - start)
    return SearchResult(best.k, best, True, best.k, nodes, time.perf_counter() - start)
