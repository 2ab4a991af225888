"""Exact evaluation of the localized and classical Turán-type bounds.

All arithmetic is on ``int`` and :class:`fractions.Fraction`; nothing here
touches floating point, so a floor that lands exactly on an integer
(e.g. 144 * 8 / 18 = 64) never flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .clique import EdgeWeights, VertexWeights, clique_number, edge_clique_weights, vertex_clique_weights
from .errors import ContractError, DomainError
from .graph import Graph, edge_count


def _check_r(n: int, r: int) -> None:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if r < 1:
        raise DomainError(f"r must be at least 1, got {r}")


def vertex_weight_sum(w: VertexWeights) -> Fraction:
    """Sum of (c(v) - 1) / c(v), accumulated exactly."""
    total = Fraction(0)
    for c in w:
        if c < 1:
            raise ContractError(f"clique weight {c} is not positive")
        total += Fraction(c - 1, c)
    return total


def vertex_localized_bound(G: Graph, w: VertexWeights) -> tuple[Fraction, int]:
    """``(exact, floored)`` value of (n/2) * sum_v (c(v)-1)/c(v)."""
    if len(w) != G.n:
        raise ContractError(f"{len(w)} vertex weights for a graph on {G.n} vertices")
    exact = Fraction(G.n, 2) * vertex_weight_sum(w)
    floored = exact.numerator // exact.denominator
    assert floored >= edge_count(G), "vertex-localized bound violated"
    return exact, floored


def classical_floor_bound(n: int, r: int) -> int:
    """floor(n^2 (r-1) / 2r) in integer arithmetic."""
    _check_r(n, r)
    return n * n * (r - 1) // (2 * r)


def classical_nofloor_bound(n: int, r: int) -> Fraction:
    _check_r(n, r)
    return Fraction(n * n * (r - 1), 2 * r)


def edge_localized_check(G: Graph, k: EdgeWeights) -> tuple[Fraction, Fraction, bool]:
    """Sum of k(e)/(k(e)-1) over edges, the bound n^2/2, and whether they meet."""
    if set(k) != set(G.edges()):
        raise ContractError("edge weights do not cover exactly the edges of the graph")
    total = Fraction(0)
    for ke in k.values():
        if ke < 2:
            raise ContractError(f"edge clique weight {ke} is below 2")
        total += Fraction(ke, ke - 1)
    bound = Fraction(G.n * G.n, 2)
    return total, bound, total == bound


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    omega: int
    vertex_local_exact: Fraction
    vertex_local_floor: int
    vertex_local_nofloor_tight: bool
    classical_floor: int | None
    classical_nofloor: Fraction | None
    edge_local_sum: Fraction
    edge_local_bound: Fraction
    tight_vertex_floor: bool
    tight_edge: bool

    @property
    def tight_classical_floor(self) -> bool:
        return self.classical_floor is not None and self.m == self.classical_floor

    @property
    def tight_classical_nofloor(self) -> bool:
        return self.classical_nofloor is not None and self.m == self.classical_nofloor

    def to_dict(self) -> dict[str, Any]:
        """Flat JSON-ready record; fractions become ``"p/q"`` strings."""
        classical: dict[str, Any] = {"r": self.omega if self.classical_floor is not None else None}
        classical["floor"] = self.classical_floor
        classical["floor_tight"] = self.tight_classical_floor
        classical["exact"] = None if self.classical_nofloor is None else fraction_str(self.classical_nofloor)
        classical["exact_tight"] = self.tight_classical_nofloor
        return {
            "n": self.n,
            "m": self.m,
            "omega": self.omega,
            "vertex_local": {
                "exact": fraction_str(self.vertex_local_exact),
                "floor": self.vertex_local_floor,
                "tight": self.tight_vertex_floor,
                "exact_tight": self.vertex_local_nofloor_tight,
            },
            "classical": classical,
            "edge_local": {
                "sum": fraction_str(self.edge_local_sum),
                "bound": fraction_str(self.edge_local_bound),
                "tight": self.tight_edge,
            },
        }


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def bound_report(G: Graph) -> BoundReport:
    m = edge_count(G)
    w = vertex_clique_weights(G)
    k = edge_clique_weights(G)
    omega = clique_number(G)
    exact, floored = vertex_localized_bound(G, w)
    esum, ebound, etight = edge_localized_check(G, k)
    # n = 0 has omega = 0 and no K_{r+1}-free statement to compare against
    cf = classical_floor_bound(G.n, omega) if omega >= 1 else None
    cn = classical_nofloor_bound(G.n, omega) if omega >= 1 else None
    return BoundReport(
        n=G.n,
        m=m,
        omega=omega,
        vertex_local_exact=exact,
        vertex_local_floor=floored,
        vertex_local_nofloor_tight=exact == m,
        classical_floor=cf,
        classical_nofloor=cn,
        edge_local_sum=esum,
        edge_local_bound=ebound,
        tight_vertex_floor=floored == m,
        tight_edge=etight,
    )


def recover_classical_chain(G: Graph) -> tuple[bool, tuple[int, int, int]]:
    """Check m <= vertex-local floor <= classical floor with r = omega(G).

    Returns ``(holds, (m, vertex_local_floor, classical_floor))``. A false
    ``holds`` can only come from a bug.
    """
    m = edge_count(G)
    _, floored = vertex_localized_bound(G, vertex_clique_weights(G))
    r = max(clique_number(G), 1)
    cf = classical_floor_bound(G.n, r)
    return m <= floored <= cf, (m, floored, cf)
