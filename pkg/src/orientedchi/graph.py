"""Undirected graphs, oriented graphs, orientations and generators.

Vertices are ``0..n-1``. Edges are stored as ``(u, v)`` with ``u < v`` in
lexicographic order; that order (the *edge order*) is what orientation masks
index into. Mask bit ``i`` is ``(mask >> i) & 1``: 0 orients edge ``i`` from
its smaller to its larger endpoint, 1 reverses it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .rng import SplitMix64

MAX_ENUM_EDGES = 24
MAX_HYPERCUBE_DIM = 20


class GraphError(ValueError):
    """Invalid graph, digraph or generator input."""


Pair = tuple[int, int]


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        seen: set[Pair] = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}: edge ({u}, {v})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    @property
    def avg_degree(self) -> float:
        return 2 * self.m / self.n

    @property
    def edge_order(self) -> tuple[Pair, ...]:
        return self.edges

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_regular(self) -> bool:
        return len({len(a) for a in self.adj}) == 1


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arcs: tuple[Pair, ...]
    _arcset: frozenset[Pair] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"digraph needs at least one vertex, got n={self.n}")
        seen: set[Pair] = set()
        for u, v in self.arcs:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}: arc ({u}, {v})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if (u, v) in seen:
                raise GraphError(f"duplicate arc ({u}, {v})")
            if (v, u) in seen:
                raise GraphError(f"antiparallel arcs ({v}, {u}) and ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(seen)))
        object.__setattr__(self, "_arcset", frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_adj(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def in_adj(self) -> tuple[frozenset[int], ...]:
        inc: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            inc[v].add(u)
        return tuple(frozenset(s) for s in inc)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcset

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def relabel(self, perm: Sequence[int]) -> OrientedGraph:
        """Copy with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of 0..n-1")
        return OrientedGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.arcs))


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> UndirectedGraph:
    return UndirectedGraph(n, tuple((int(u), int(v)) for u, v in edges))


def build_oriented(n: int, arcs: Iterable[Sequence[int]]) -> OrientedGraph:
    return OrientedGraph(n, tuple((int(u), int(v)) for u, v in arcs))


def underlying(D: OrientedGraph) -> UndirectedGraph:
    return UndirectedGraph(D.n, tuple((min(u, v), max(u, v)) for u, v in D.arcs))


def _mask_bits(mask: int | Sequence[int], m: int) -> list[int]:
    if isinstance(mask, int):
        if mask < 0 or mask >> m:
            raise GraphError(f"mask {mask} does not fit in {m} bits")
        return [(mask >> i) & 1 for i in range(m)]
    bits = [int(b) for b in mask]
    if len(bits) != m:
        raise GraphError(f"mask has length {len(bits)}, graph has m={m} edges")
    if any(b not in (0, 1) for b in bits):
        raise GraphError("mask entries must be 0 or 1")
    return bits


def orient(G: UndirectedGraph, mask: int | Sequence[int]) -> OrientedGraph:
    """Orient ``G`` by ``mask`` (an int or a bit list over the edge order)."""
    bits = _mask_bits(mask, G.m)
    arcs = tuple((v, u) if b else (u, v) for (u, v), b in zip(G.edges, bits))
    return OrientedGraph(G.n, arcs)


def orientation_mask(G: UndirectedGraph, D: OrientedGraph) -> int:
    """Inverse of :func:`orient`: the integer mask giving ``D``."""
    if D.n != G.n or D.m != G.m:
        raise GraphError("digraph is not an orientation of the graph")
    mask = 0
    for i, (u, v) in enumerate(G.edges):
        if D.has_arc(v, u):
            mask |= 1 << i
        elif not D.has_arc(u, v):
            raise GraphError(f"edge ({u}, {v}) has no arc in the digraph")
    return mask


def enumerate_orientations(
    G: UndirectedGraph, limit: int = MAX_ENUM_EDGES
) -> Iterator[OrientedGraph]:
    """Yield ``orient(G, mask)`` for ``mask = 0 .. 2**m - 1`` in order."""
    if G.m > limit:
        raise GraphError(
            f"refusing to enumerate 2^{G.m} = {2 ** G.m} orientations (limit m <= {limit})"
        )
    return _orientations(G)


def _orientations(G: UndirectedGraph) -> Iterator[OrientedGraph]:
    for mask in range(1 << G.m):
        yield orient(G, mask)


def random_orientation_mask(G: UndirectedGraph, seed: int) -> int:
    """Bit ``i`` is the top bit of the ``i``-th SplitMix64 output."""
    rng = SplitMix64(seed)
    mask = 0
    for i in range(G.m):
        mask |= rng.bit() << i
    return mask


def random_orientation(G: UndirectedGraph, seed: int) -> OrientedGraph:
    return orient(G, random_orientation_mask(G, seed))


def gen_hypercube(d: int, limit: int = MAX_HYPERCUBE_DIM) -> UndirectedGraph:
    if not 1 <= d <= limit:
        raise GraphError(f"hypercube dimension must be in 1..{limit}, got {d}")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1]
    return build_graph(n, edges)


def gen_basic(kind: str, n: int) -> UndirectedGraph:
    if kind == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if n < 1:
        raise GraphError(f"{kind} needs n >= 1, got {n}")
    if kind == "path":
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "complete":
        return build_graph(n, itertools.combinations(range(n), 2))
    if kind == "star":
        return build_graph(n, [(0, i) for i in range(1, n)])
    raise GraphError(f"unknown graph kind {kind!r}")


def gen_empty(n: int) -> UndirectedGraph:
    return build_graph(n, [])


def gen_k11n_oriented(n: int) -> OrientedGraph:
    """K_{1,1,n} with a -> v_i -> b for every i and b -> a.

    Apex ``a`` is vertex 0, apex ``b`` is vertex 1, the independent vertices
    are ``2..n+1``.
    """
    if n < 2:
        raise GraphError(f"K_{{1,1,n}} construction needs n >= 2, got {n}")
    a, b = 0, 1
    arcs = [(b, a)]
    for v in range(2, n + 2):
        arcs += [(a, v), (v, b)]
    return build_oriented(n + 2, arcs)
