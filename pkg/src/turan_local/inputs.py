"""Graph input formats used by the command line.

Three kinds of input are accepted everywhere:

* edge-list text: a line ``n m`` followed by ``m`` lines ``u v`` (0-indexed);
  blank lines and ``#`` comments are ignored;
* graph6 text, one graph per line;
* generator specs such as ``turan:12:9`` (see :func:`from_spec`).
"""

from __future__ import annotations

import random

from .errors import DomainError, MalformedGraphError
from .extremal import turan_graph
from .graph import (
    PARAGLIDER,
    Y_GRAPH,
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    path_graph,
)
from .graph6 import parse_graph6, read_graph6_lines

GENERATORS = "turan:N:R, complete:N, empty:N, cycle:N, path:N, paraglider, y, random:N:P[:SEED], edges:N:U-V,U-V,..."


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p): each pair ``u < v`` in lexicographic order kept with probability p."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"edge probability must lie in [0, 1], got {p}")
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedGraphError(f"{what} must be an integer, got {tok!r}") from None


def from_spec(spec: str) -> Graph | None:
    """Build a graph from a generator spec; ``None`` if ``spec`` is not one."""
    name, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    name = name.lower()
    if name == "turan" and len(args) == 2:
        return turan_graph(_int(args[0], "n"), _int(args[1], "r"))
    if name in ("complete", "empty", "cycle", "path") and len(args) == 1:
        build = {"complete": complete_graph, "empty": empty_graph, "cycle": cycle_graph, "path": path_graph}[name]
        return build(_int(args[0], "n"))
    if name in ("paraglider", "x") and not args:
        return PARAGLIDER
    if name == "y" and not args:
        return Y_GRAPH
    if name == "random" and len(args) in (2, 3):
        try:
            p = float(args[1])
        except ValueError:
            raise DomainError(f"bad probability {args[1]!r}") from None
        seed = _int(args[2], "seed") if len(args) == 3 else 0
        return random_graph(_int(args[0], "n"), p, random.Random(seed))
    if name == "edges" and len(args) == 2:
        edges = []
        for item in filter(None, args[1].split(",")):
            u, sep, v = item.partition("-")
            if not sep:
                raise MalformedGraphError(f"edge {item!r} is not of the form U-V")
            edges.append((_int(u, "vertex"), _int(v, "vertex")))
        return graph_from_edges(_int(args[0], "n"), edges)
    return None


def parse_edge_list(text: str) -> Graph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines:
        raise MalformedGraphError("empty edge list")
    lineno, head = lines[0]
    if len(head) != 2:
        raise MalformedGraphError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}")
    n, m = (_int(t, f"line {lineno}: header field") for t in head)
    body = lines[1:]
    if len(body) != m:
        raise MalformedGraphError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise MalformedGraphError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}")
        edges.append((_int(toks[0], f"line {lineno}: u"), _int(toks[1], f"line {lineno}: v")))
    try:
        return graph_from_edges(n, edges)
    except MalformedGraphError as exc:
        raise MalformedGraphError(f"{exc}") from None


def _looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            toks = line.split()
            return len(toks) == 2 and all(t.lstrip("-").isdigit() for t in toks)
    return False


def parse_text(text: str) -> list[Graph]:
    """Parse edge-list or multi-line graph6 text."""
    if _looks_like_edge_list(text):
        return [parse_edge_list(text)]
    return list(read_graph6_lines(text.splitlines()))


def parse_argument(arg: str) -> Graph:
    """A command-line graph argument: generator spec or a graph6 string."""
    G = from_spec(arg)
    if G is not None:
        return G
    return parse_graph6(arg)
