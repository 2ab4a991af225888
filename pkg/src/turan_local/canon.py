"""Canonical forms for small graphs.

``canonical_form`` runs an individualization-refinement search: the
vertex partition is refined to an equitable one, a vertex of the first
non-singleton cell is individualized, and so on down to discrete
partitions. Each leaf fixes a vertex ordering; the form is the smallest
upper-triangle adjacency code over all leaves. Every step depends only on
the isomorphism type, so isomorphic graphs share the same leaf set.

``brute_canonical_form`` minimizes the same code over all n! orderings
and is kept as an independent reference for tests.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .errors import SizeLimitError
from .graph import Graph, popcount

CANON_N_MAX = 10


def _code(masks: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of the relabeled graph, column-major.

    ``order[i]`` is the original vertex placed at position ``i``. The
    first bit emitted is the most significant.
    """
    code = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            code = code << 1 | (mj >> order[i] & 1)
    return code


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            if w >= len(cells):
                break
            wmask = 0
            for v in cells[w]:
                wmask |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(masks[v] & wmask), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
            cells = out
    return cells


def _twin_cell(masks: Sequence[int], cell: list[int]) -> bool:
    """True when any transposition inside ``cell`` is an automorphism."""
    v0 = cell[0]
    for v in cell[1:]:
        pair = 1 << v0 | 1 << v
        if (masks[v0] ^ masks[v]) & ~pair:
            return False
    return True


def _search(masks: Sequence[int], cells: list[list[int]], best: list[int]) -> None:
    cells = _refine(masks, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        code = _code(masks, [c[0] for c in cells])
        if best[0] < 0 or code < best[0]:
            best[0] = code
        return
    cell = cells[target]
    choices = cell[:1] if _twin_cell(masks, cell) else cell
    for v in choices:
        rest = [u for u in cell if u != v]
        _search(masks, cells[:target] + [[v], rest] + cells[target + 1:], best)


def _to_bytes(n: int, code: int) -> bytes:
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_code(G: Graph) -> int:
    if G.n > CANON_N_MAX:
        raise SizeLimitError(f"canonical form limited to n <= {CANON_N_MAX}, got {G.n}")
    if G.n <= 1:
        return 0
    best = [-1]
    # initial cells ordered by degree
    by_deg: dict[int, list[int]] = {}
    for v in range(G.n):
        by_deg.setdefault(popcount(G.masks[v]), []).append(v)
    _search(G.masks, [by_deg[d] for d in sorted(by_deg)], best)
    return best[0]


def canonical_form(G: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (n <= 10)."""
    return _to_bytes(G.n, canonical_code(G))


def canonical_graph(G: Graph) -> Graph:
    """The representative whose upper-triangle code is the canonical code."""
    from .graph6 import graph_from_code

    return graph_from_code(G.n, canonical_code(G))


def brute_canonical_form(G: Graph) -> bytes:
    """Minimum code over every vertex ordering; exponential, n <= 8."""
    if G.n > 8:
        raise SizeLimitError(f"brute-force canonical form limited to n <= 8, got {G.n}")
    code = min((_code(G.masks, p) for p in permutations(range(G.n))), default=0)
    return _to_bytes(G.n, code)
