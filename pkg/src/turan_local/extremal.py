"""Turán graphs, the class S, and the extremal classification.

S is the set of Turán graphs T(n, r) whose edge count equals the floored
classical bound floor(n^2 (r-1) / 2r). Together with the paraglider X
(complement of P2 + P3) and Y (complement of P3) these are exactly the
graphs meeting the vertex-localized bound with equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import permutations
from math import comb

from .clique import VertexWeights
from .errors import DomainError
from .graph import PARAGLIDER, Graph, complement, components, edge_count, graph_from_edges


@dataclass(frozen=True)
class TuranParams:
    n: int
    r: int

    def __post_init__(self) -> None:
        _check_params(self.n, self.r)

    @property
    def t(self) -> int:
        return self.n // self.r

    @property
    def s(self) -> int:
        return self.n % self.r


def _check_params(n: int, r: int) -> None:
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n, got n = {n}, r = {r}")


def turan_graph(n: int, r: int) -> Graph:
    """T(n, r) with vertex ``v`` in class ``v mod r``."""
    _check_params(n, r)
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if u % r != v % r])


def turan_partition(n: int, r: int) -> list[list[int]]:
    _check_params(n, r)
    return [list(range(i, n, r)) for i in range(r)]


def turan_edge_count(n: int, r: int) -> int:
    """|E(T(n, r))| = C(n,2) - s C(t+1,2) - (r-s) C(t,2)."""
    _check_params(n, r)
    t, s = divmod(n, r)
    return comb(n, 2) - s * comb(t + 1, 2) - (r - s) * comb(t, 2)


def turan_edge_count_alt(n: int, r: int) -> int:
    """Second closed form, (r-1)(n^2-s^2)/(2r) + C(s,2); always integral."""
    _check_params(n, r)
    s = n % r
    num = (r - 1) * (n * n - s * s)
    q, rem = divmod(num, 2 * r)
    if rem:
        raise ArithmeticError(f"(r-1)(n^2-s^2)/(2r) is not integral for n = {n}, r = {r}")
    return q + comb(s, 2)


def in_S(n: int, r: int) -> bool:
    """Whether T(n, r) attains the floored classical bound: s <= 2 or r(s-2) < s^2."""
    _check_params(n, r)
    s = n % r
    return s <= 2 or r * (s - 2) < s * s


def recognize_turan(G: Graph) -> tuple[TuranParams, list[list[int]]] | None:
    """Parameters and classes if ``G`` is a Turán graph, else ``None``.

    A complete multipartite graph is one whose complement is a disjoint
    union of cliques; it is Turán when the class sizes differ by at most 1.
    """
    if G.n == 0:
        return None
    H = complement(G)
    classes = components(H)
    for cls in classes:
        k = len(cls)
        if sum(bin(H.masks[v]).count("1") for v in cls) != k * (k - 1):
            return None
    sizes = [len(c) for c in classes]
    if max(sizes) - min(sizes) > 1:
        return None
    classes.sort(key=lambda c: (-len(c), c))
    return TuranParams(G.n, len(classes)), classes


def is_isomorphic_small(G: Graph, H: Graph) -> bool:
    """Brute-force isomorphism test; intended for n <= 8."""
    if G.n != H.n or edge_count(G) != edge_count(H):
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    hedges = set(H.edges())
    gedges = G.edges()
    for p in permutations(range(G.n)):
        if all(tuple(sorted((p[u], p[v]))) in hedges for u, v in gedges):
            return True
    return False


_PARAGLIDER_DEGREES = sorted(PARAGLIDER.degrees())


def is_paraglider(G: Graph) -> bool:
    if G.n != 5 or sorted(G.degrees()) != _PARAGLIDER_DEGREES:
        return False
    return is_isomorphic_small(G, PARAGLIDER)


def is_y_graph(G: Graph) -> bool:
    return G.n == 3 and edge_count(G) == 1


class Tag(str, enum.Enum):
    TURAN_IN_S = "TuranInS"
    PARAGLIDER = "Paraglider"
    Y_GRAPH = "YGraph"
    NOT_EXTREMAL = "NotExtremal"


@dataclass(frozen=True)
class ExtremalClassification:
    tag: Tag
    params: TuranParams | None = None
    partition: list[list[int]] = field(default_factory=list)

    @property
    def is_extremal(self) -> bool:
        return self.tag is not Tag.NOT_EXTREMAL

    def to_dict(self) -> dict:
        out: dict = {"tag": self.tag.value}
        if self.params is not None:
            p = self.params
            out.update(n=p.n, r=p.r, t=p.t, s=p.s, partition=self.partition)
        return out


def classify_extremal(G: Graph) -> ExtremalClassification:
    """Structural classification; does not evaluate any bound."""
    if G.n == 0:
        return ExtremalClassification(Tag.NOT_EXTREMAL)
    found = recognize_turan(G)
    if found is not None and in_S(found[0].n, found[0].r):
        return ExtremalClassification(Tag.TURAN_IN_S, found[0], found[1])
    if is_paraglider(G):
        return ExtremalClassification(Tag.PARAGLIDER)
    if is_y_graph(G):
        return ExtremalClassification(Tag.Y_GRAPH)
    return ExtremalClassification(Tag.NOT_EXTREMAL)


def extremal_weight_profile_check(G: Graph, w: VertexWeights) -> bool:
    """All weights equal omega, or exactly one equals omega - 1 and the rest omega."""
    if G.n == 0:
        return True
    omega = max(w)
    light = [c for c in w if c != omega]
    return not light or light == [omega - 1]
