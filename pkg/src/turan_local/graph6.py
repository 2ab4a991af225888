"""graph6 reading and writing.

Format (McKay): N(n) followed by the upper triangle of the adjacency
matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
six bits per byte, each byte offset by 63, zero-padded on the right.
N(n) is one byte for n <= 62 and ``~`` plus three bytes for
n <= 258047.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"
_MEDIUM_MAX = 258047


def _encode_n(n: int) -> str:
    if n < 0 or n > _MEDIUM_MAX:
        raise Graph6Error(f"cannot encode n = {n}", 0)
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr((n >> shift & 63) + 63) for shift in (12, 6, 0))


def _pack(bits: Iterable[int], nbits: int) -> str:
    out = []
    acc = 0
    k = 0
    for b in bits:
        acc = acc << 1 | b
        k += 1
        if k == 6:
            out.append(chr(acc + 63))
            acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def _upper_bits(G: Graph) -> Iterator[int]:
    for j in range(1, G.n):
        mj = G.masks[j]
        for i in range(j):
            yield mj >> i & 1


def write_graph6(G: Graph) -> str:
    """Encode ``G`` as a single graph6 line (no newline, no header)."""
    return _encode_n(G.n) + _pack(_upper_bits(G), G.n * (G.n - 1) // 2)


def graph_from_code(n: int, code: int) -> Graph:
    """Inverse of the column-major upper-triangle code (first bit most significant)."""
    nbits = n * (n - 1) // 2
    masks = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if code >> pos & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(masks))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Surrounding whitespace and the header are ignored."""
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    if not line:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", base + i)
    if line[0] != "~":
        n, pos = ord(line[0]) - 63, 1
    else:
        if len(line) > 1 and line[1] == "~":
            raise Graph6Error("8-byte vertex counts are not supported", base + 1)
        if len(line) < 4:
            raise Graph6Error("truncated vertex count", base + len(line))
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit field: need {need} bytes, got {len(body)}", base + len(line))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit field", base + pos + need)
    masks = [0] * n
    k = 0
    j, i = 1, 0
    for off, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if val >> shift & 1:
                    raise Graph6Error("non-zero padding bits", base + pos + off)
                continue
            if val >> shift & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph(n, tuple(masks))


def read_graph6_lines(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Yield graphs from a graph6 stream, skipping blank lines.

    A parse failure re-raises with the line number prefixed.
    """
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.args[0]}", exc.offset) from None
