"""Exhaustive certification of the bounds over all small graphs.

For every graph the selected inequalities are evaluated exactly, and the
set of graphs meeting each one with equality is collected by canonical
graph6 string. Those sets are compared with equality classes built
independently from Turán-graph constructions (plus X and Y where they
apply). Violations are recorded as data, never raised.

Theorem ids:

``main``    m <= floor((n/2) sum (c(v)-1)/c(v)); equality on S + {X, Y}
``wlocal``  m <= (n/2) sum (c(v)-1)/c(v); equality on regular Turán graphs
``gturan``  sum_e k(e)/(k(e)-1) <= n^2/2; equality on regular Turán graphs with an edge
``fturan``  m <= floor(n^2 (r-1)/2r) and m <= n^2 (r-1)/2r with r = omega;
            equality on S, resp. on regular Turán graphs (tight set ``wturan``)
"""

from __future__ import annotations

import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Any, Iterable, Iterator, Sequence

from .bounds import classical_floor_bound, classical_nofloor_bound, vertex_weight_sum
from .canon import canonical_graph
from .clique import edge_clique_weights, vertex_clique_weights
from .enumeration import ENUM_N_MAX, enumerate_graphs
from .errors import SizeLimitError
from .extremal import Tag, classify_extremal, extremal_weight_profile_check, in_S, turan_graph
from .graph import PARAGLIDER, Y_GRAPH, Graph, edge_count, is_connected
from .graph6 import write_graph6

THEOREMS = ("main", "wlocal", "gturan", "fturan")
# tight-set ids collected per theorem selection
TIGHT_SETS = {"main": ("main",), "wlocal": ("wlocal",), "gturan": ("gturan",), "fturan": ("fturan", "wturan")}
BATCH_SIZE = 500


@dataclass(frozen=True, order=True)
class Violation:
    graph6: str
    theorem: str
    details: str

    def to_dict(self) -> dict[str, str]:
        return {"graph6": self.graph6, "theorem": self.theorem, "details": self.details}


@dataclass
class VerificationReport:
    theorems: tuple[str, ...]
    n_range: list[int] = field(default_factory=list)
    graphs_checked: dict[int, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    # tight-set id -> n -> sorted canonical graph6 strings
    tight_found: dict[str, dict[int, list[str]]] = field(default_factory=dict)
    tight_expected: dict[str, dict[int, list[str]]] = field(default_factory=dict)

    @property
    def extremal_found(self) -> dict[int, list[str]]:
        return self.tight_found.get("main", {})

    @property
    def extremal_expected(self) -> dict[int, list[str]]:
        return self.tight_expected.get("main", {})

    def set_mismatches(self) -> list[tuple[str, int]]:
        return [
            (tid, n)
            for tid, per_n in self.tight_expected.items()
            for n in per_n
            if set(per_n[n]) != set(self.tight_found.get(tid, {}).get(n, []))
        ]

    @property
    def passed(self) -> bool:
        return not self.violations and not self.set_mismatches()

    def per_n_records(self) -> list[dict[str, Any]]:
        out = []
        for n in self.n_range:
            viol = [v.to_dict() for v in self.violations if _g6_order(v.graph6) == n]
            ok = not viol and not any(k == n for _, k in self.set_mismatches())
            rec: dict[str, Any] = {
                "n": n,
                "checked": self.graphs_checked.get(n, 0),
                "violations": viol,
                "extremal": self.extremal_found.get(n, []),
                "passed": ok,
            }
            rec["tight"] = {tid: per_n.get(n, []) for tid, per_n in self.tight_found.items()}
            out.append(rec)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "per_n": self.per_n_records(),
            "summary": {
                "theorems": list(self.theorems),
                "n_range": self.n_range,
                "checked": sum(self.graphs_checked.values()),
                "violations": len(self.violations),
                "set_mismatches": [{"set": t, "n": n} for t, n in self.set_mismatches()],
                "passed": self.passed,
            },
        }

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _g6_order(g6: str) -> int:
    return ord(g6[0]) - 63 if g6[0] != "~" else -1


def canonical_g6(G: Graph) -> str:
    return write_graph6(canonical_graph(G))


def expected_tight_sets(n: int, tight_ids: Iterable[str]) -> dict[str, list[str]]:
    """Equality classes built from constructions, independent of any sweep."""
    turan = {r: canonical_g6(turan_graph(n, r)) for r in range(1, n + 1)}
    out = {}
    for tid in tight_ids:
        if tid in ("main", "fturan"):
            found = {g for r, g in turan.items() if in_S(n, r)}
            if tid == "main":
                if n == 5:
                    found.add(canonical_g6(PARAGLIDER))
                if n == 3:
                    found.add(canonical_g6(Y_GRAPH))
        elif tid in ("wlocal", "wturan"):
            found = {g for r, g in turan.items() if n % r == 0}
        elif tid == "gturan":
            found = {g for r, g in turan.items() if n % r == 0 and r >= 2}
        else:
            raise ValueError(f"unknown tight set {tid!r}")
        out[tid] = sorted(found)
    return out


@dataclass
class GraphResult:
    n: int
    graph6: str
    violations: list[Violation]
    tight: list[str]


def check_graph(G: Graph, theorems: Sequence[str]) -> GraphResult:
    """Evaluate the selected theorems on one graph."""
    g6 = write_graph6(G)
    n, m = G.n, edge_count(G)
    viol: list[Violation] = []
    tight: list[str] = []

    def fail(theorem: str, details: str) -> None:
        viol.append(Violation(g6, theorem, details))

    w = vertex_clique_weights(G)
    omega = max(w, default=0)
    exact = Fraction(n, 2) * vertex_weight_sum(w)
    vfloor = exact.numerator // exact.denominator
    cfloor = classical_floor_bound(n, omega)

    if "main" in theorems:
        if m > vfloor:
            fail("main", f"m = {m} exceeds vertex-localized floor {vfloor}")
        is_tight = m == vfloor
        cls = classify_extremal(G)
        if is_tight:
            tight.append("main")
            if not (is_connected(G) or m == 0 or cls.tag is Tag.Y_GRAPH):
                fail("main", "extremal graph is disconnected, not edgeless and not Y")
            if not extremal_weight_profile_check(G, w):
                fail("main", f"extremal weight profile {w} has more than one light vertex")
        if cls.is_extremal != is_tight:
            fail("main", f"classification {cls.tag.value} disagrees with tightness {is_tight}")
        if vfloor > cfloor:
            fail("main", f"vertex-localized floor {vfloor} exceeds classical floor {cfloor}")
        if is_tight and vfloor == cfloor and cls.tag is not Tag.TURAN_IN_S:
            fail("main", f"{cls.tag.value} attains the classical floor")

    if "wlocal" in theorems:
        if m > exact:
            fail("wlocal", f"m = {m} exceeds {exact}")
        if m == exact:
            tight.append("wlocal")

    if "gturan" in theorems:
        k = edge_clique_weights(G)
        esum = sum((Fraction(x, x - 1) for x in k.values()), Fraction(0))
        if esum > Fraction(n * n, 2):
            fail("gturan", f"edge sum {esum} exceeds {Fraction(n * n, 2)}")
        if esum == Fraction(n * n, 2):
            tight.append("gturan")
        if omega >= 2 and esum < Fraction(m * omega, omega - 1):
            fail("gturan", f"edge sum {esum} below m r/(r-1) = {Fraction(m * omega, omega - 1)}")

    if "fturan" in theorems:
        cexact = classical_nofloor_bound(n, omega)
        if m > cfloor:
            fail("fturan", f"m = {m} exceeds classical floor {cfloor} at r = {omega}")
        if m > cexact:
            fail("fturan", f"m = {m} exceeds {cexact} at r = {omega}")
        if m == cfloor:
            tight.append("fturan")
        if m == cexact:
            tight.append("wturan")

    return GraphResult(n, g6, viol, tight)


def _check_batch(args: tuple[list[Graph], tuple[str, ...]]) -> list[tuple[int, list[Violation], list[tuple[str, str]]]]:
    graphs, theorems = args
    out = []
    for G in graphs:
        res = check_graph(G, theorems)
        # canonicalize only the (rare) tight graphs
        canon = canonical_g6(G) if res.tight else ""
        out.append((res.n, res.violations, [(tid, canon) for tid in res.tight]))
    return out


def _batches(graphs: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    it = iter(graphs)
    while batch := list(islice(it, size)):
        yield batch


def verify_theorems(
    n_max: int | None = None,
    theorems: Iterable[str] = THEOREMS,
    external_graphs: Iterable[Graph] | None = None,
    workers: int = 1,
    n_min: int = 1,
) -> VerificationReport:
    """Sweep all graphs on ``n_min..n_max`` vertices (plus any external graphs).

    ``external_graphs`` is assumed to list every isomorphism class for each
    order it contains; the equality sets are compared against the expected
    ones for those orders as well.
    """
    selected = tuple(t for t in THEOREMS if t in set(theorems))
    unknown = set(theorems) - set(THEOREMS)
    if unknown:
        raise ValueError(f"unknown theorem ids {sorted(unknown)}")
    if n_max is not None and n_max > ENUM_N_MAX:
        raise SizeLimitError(f"built-in enumeration stops at n = {ENUM_N_MAX}; supply larger graphs as graph6")

    def stream() -> Iterator[Graph]:
        if n_max is not None:
            for n in range(max(n_min, 1), n_max + 1):
                yield from enumerate_graphs(n)
        if external_graphs is not None:
            for G in external_graphs:
                if G.n >= 1:
                    yield G

    report = VerificationReport(theorems=selected)
    checked: dict[int, int] = defaultdict(int)
    found: dict[str, dict[int, set[str]]] = defaultdict(lambda: defaultdict(set))
    violations: list[Violation] = []

    jobs = ((batch, selected) for batch in _batches(stream(), BATCH_SIZE))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_batch, jobs))
    else:
        results = [_check_batch(job) for job in jobs]

    for batch in results:
        for n, viol, tight in batch:
            checked[n] += 1
            violations.extend(viol)
            for tid, g6 in tight:
                found[tid][n].add(g6)

    tight_ids = [tid for t in selected for tid in TIGHT_SETS[t]]
    report.n_range = sorted(checked)
    report.graphs_checked = dict(sorted(checked.items()))
    report.violations = sorted(violations)
    report.tight_found = {tid: {n: sorted(found[tid][n]) for n in report.n_range} for tid in tight_ids}
    expected = {n: expected_tight_sets(n, tight_ids) for n in report.n_range}
    report.tight_expected = {tid: {n: expected[n][tid] for n in report.n_range} for tid in tight_ids}
    return report
