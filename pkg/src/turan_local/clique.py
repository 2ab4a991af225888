"""Maximum cliques and the clique weights c(v) and k(e).

Two independent routes are provided. ``max_clique`` and the weight
functions use a bitset branch and bound with a greedy-colouring bound;
the ``oracle_*`` functions enumerate every vertex subset and share no
search logic with it. Tests compare the two.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import SizeLimitError
from .graph import Graph, iter_bits, popcount

CLIQUE_N_MAX = 64
ORACLE_N_MAX = 20

VertexWeights = tuple[int, ...]
EdgeWeights = dict[tuple[int, int], int]


def _check_cap(G: Graph) -> None:
    if G.n > CLIQUE_N_MAX:
        raise SizeLimitError(f"n = {G.n} exceeds the clique kernel cap of {CLIQUE_N_MAX}")


def _colour_bound(masks: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Greedy sequential colouring of ``cand``.

    Returns ``(vertex, colour)`` pairs ordered by non-decreasing colour.
    The colour of a vertex bounds the clique size reachable from the
    vertices up to and including it.
    """
    order = []
    colour = 0
    uncoloured = cand
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~masks[v] & ~low
            uncoloured &= ~low
            order.append((v, colour))
    return order


def _clique_in(masks: Sequence[int], cand: int) -> tuple[int, int]:
    """Largest clique inside the vertex set ``cand``.

    Returns ``(size, mask)``; among maximum cliques the one whose sorted
    vertex tuple is lexicographically smallest wins.
    """
    best = [0, 0]

    def better(mask: int) -> bool:
        size = popcount(mask)
        if size != best[0]:
            return size > best[0]
        return sorted(iter_bits(mask)) < sorted(iter_bits(best[1]))

    def expand(current: int, size: int, cand: int) -> None:
        if not cand:
            if better(current):
                best[0], best[1] = size, current
            return
        order = _colour_bound(masks, cand)
        # Walk from the highest colour down; ties with the incumbent are
        # still explored so that the lexicographic witness is found.
        for v, colour in reversed(order):
            if size + colour < best[0]:
                return
            expand(current | 1 << v, size + 1, cand & masks[v])
            cand &= ~(1 << v)
            if not cand and size >= best[0]:
                if better(current):
                    best[0], best[1] = size, current
                return

    expand(0, 0, cand)
    return best[0], best[1]


def max_clique(G: Graph) -> tuple[int, frozenset[int]]:
    """Clique number of ``G`` with a witness clique.

    >>> from .graph import complete_graph
    >>> max_clique(complete_graph(4))
    (4, frozenset({0, 1, 2, 3}))
    """
    _check_cap(G)
    size, mask = _clique_in(G.masks, (1 << G.n) - 1)
    return size, frozenset(iter_bits(mask))


def clique_number(G: Graph) -> int:
    return max_clique(G)[0]


def vertex_clique_weights(G: Graph) -> VertexWeights:
    """c(v) = 1 + omega(G[N(v)]) for every vertex."""
    _check_cap(G)
    return tuple(1 + _clique_in(G.masks, G.masks[v])[0] for v in range(G.n))


def edge_clique_weights(G: Graph) -> EdgeWeights:
    """k(uv) = 2 + omega(G[N(u) & N(v)]) for every edge ``u < v``."""
    _check_cap(G)
    return {
        (u, v): 2 + _clique_in(G.masks, G.masks[u] & G.masks[v])[0]
        for u, v in G.edges()
    }


# -- brute-force oracle ----------------------------------------------------


def _all_cliques(G: Graph) -> list[int]:
    if G.n > ORACLE_N_MAX:
        raise SizeLimitError(f"oracle limited to n <= {ORACLE_N_MAX}, got {G.n}")
    is_clique = bytearray(1 << G.n)
    is_clique[0] = 1
    found = [0]
    for mask in range(1, 1 << G.n):
        low = mask & -mask
        rest = mask ^ low
        v = low.bit_length() - 1
        if is_clique[rest] and G.masks[v] & rest == rest:
            is_clique[mask] = 1
            found.append(mask)
    return found


def oracle_max_clique(G: Graph) -> tuple[int, frozenset[int]]:
    """Exhaustive-subset counterpart of :func:`max_clique` (n <= 20)."""
    best: tuple[int, tuple[int, ...]] = (0, ())
    for mask in _all_cliques(G):
        members = tuple(iter_bits(mask))
        if len(members) > best[0] or (len(members) == best[0] and members < best[1]):
            best = (len(members), members)
    return best[0], frozenset(best[1])


def oracle_vertex_weights(G: Graph) -> VertexWeights:
    c = [0] * G.n
    for mask in _all_cliques(G):
        size = popcount(mask)
        for v in iter_bits(mask):
            c[v] = max(c[v], size)
    return tuple(c)


def oracle_edge_weights(G: Graph) -> EdgeWeights:
    k = {e: 0 for e in G.edges()}
    for mask in _all_cliques(G):
        members = list(iter_bits(mask))
        size = len(members)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if size > k[(u, v)]:
                    k[(u, v)] = size
    return k


def is_clique(G: Graph, vertices: Mapping[int, object] | Sequence[int] | frozenset[int]) -> bool:
    vs = list(vertices)
    return all(G.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])
