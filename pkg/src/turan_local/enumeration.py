"""One representative per isomorphism class of graphs on n <= 8 vertices.

Graphs on n vertices are built from the class representatives on n - 1
vertices by adding a vertex adjacent to some subset of the old ones.
Every graph has a minimum-degree vertex whose deletion leaves one of the
smaller representatives, so only augmentations in which the new vertex
has minimum degree are needed; duplicates are removed by canonical form.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import canonical_code
from .errors import SizeLimitError
from .graph import Graph, iter_bits, popcount
from .graph6 import graph_from_code

ENUM_N_MAX = 8

# Non-isomorphic graph counts for n = 0..8.
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)


@lru_cache(maxsize=None)
def _class_codes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    seen: set[int] = set()
    for code in _class_codes(n - 1):
        parent = graph_from_code(n - 1, code)
        degs = [popcount(m) for m in parent.masks]
        for nbrs in range(1 << (n - 1)):
            d = popcount(nbrs)
            if any(degs[u] + (nbrs >> u & 1) < d for u in range(n - 1)):
                continue
            masks = list(parent.masks)
            for u in iter_bits(nbrs):
                masks[u] |= 1 << (n - 1)
            masks.append(nbrs)
            seen.add(canonical_code(Graph(n, tuple(masks))))
    return tuple(sorted(seen))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield the canonical representative of every isomorphism class on n vertices."""
    if not 1 <= n <= ENUM_N_MAX:
        raise SizeLimitError(f"built-in enumeration covers 1 <= n <= {ENUM_N_MAX}, got {n}")
    for code in _class_codes(n):
        yield graph_from_code(n, code)


def count_graphs(n: int) -> int:
    if not 1 <= n <= ENUM_N_MAX:
        raise SizeLimitError(f"built-in enumeration covers 1 <= n <= {ENUM_N_MAX}, got {n}")
    return len(_class_codes(n))
