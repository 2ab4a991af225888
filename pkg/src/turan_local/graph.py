"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is held as one Python ``int`` bitmask per vertex: bit ``u`` of
``masks[v]`` is set iff ``u ~ v``. Clique search, complement and the
canonical-form code all work directly on these masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MalformedGraphError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise MalformedGraphError(f"negative vertex count {self.n}")
        if len(self.masks) != self.n:
            raise MalformedGraphError(f"expected {self.n} adjacency masks, got {len(self.masks)}")
        full = (1 << self.n) - 1
        for v, mv in enumerate(self.masks):
            if mv & ~full or mv < 0:
                raise MalformedGraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if mv >> v & 1:
                raise MalformedGraphError(f"self-loop at vertex {v}")
            for u in iter_bits(mv):
                if not self.masks[u] >> v & 1:
                    raise MalformedGraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Adjacency as per-vertex index sets."""
        return tuple(frozenset(iter_bits(m)) for m in self.masks)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.masks[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.masks[v])

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self.masks]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return edge_count(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicates and reversed pairs collapse.

    >>> graph_from_edges(3, [(0, 1), (1, 0)]).edges()
    [(0, 1)]
    """
    if n < 0:
        raise MalformedGraphError(f"negative vertex count {n}")
    masks = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedGraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise MalformedGraphError(f"self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise MalformedGraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def edge_count(G: Graph) -> int:
    return sum(popcount(m) for m in G.masks) // 2


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full ^ m ^ (1 << v) for v, m in enumerate(G.masks)))


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``.

    Returns ``(H, remap)`` where ``remap[i]`` is the original index of
    vertex ``i`` of ``H``. Vertices are kept in increasing original order.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < G.n:
            raise MalformedGraphError(f"vertex {v} outside [0, {G.n})")
    masks = []
    for v in keep:
        mv = G.masks[v]
        masks.append(sum(1 << i for i, u in enumerate(keep) if mv >> u & 1))
    return Graph(len(keep), tuple(masks)), tuple(keep)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise MalformedGraphError("relabeling is not a permutation of the vertices")
    masks = [0] * G.n
    for v, mv in enumerate(G.masks):
        for u in iter_bits(mv):
            masks[perm[v]] |= 1 << perm[u]
    return Graph(G.n, tuple(masks))


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << G.n) - 1


def components(G: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    out = []
    unseen = (1 << G.n) - 1
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(list(iter_bits(comp)))
        unseen &= ~comp
    return out


# The two exceptional extremal graphs. PARAGLIDER uses the labeling
# a, b, c, d, e -> 0..4 with the apex a of degree 2 first.
PARAGLIDER = graph_from_edges(5, [(0, 1), (0, 2), (1, 4), (1, 3), (2, 4), (2, 3), (4, 3)])
Y_GRAPH = graph_from_edges(3, [(0, 1)])
