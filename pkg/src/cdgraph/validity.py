"""Necessary conditions for a graph to be the character degree graph of a solvable group.

Every failing check carries a witness that can be re-verified against the
graph directly (an independent triple, a far pair, the cut vertices, ...).
Passing all checks never certifies a graph; it only means no known
obstruction applies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .graph_core import (
    INF,
    Graph,
    block_decomposition,
    bfs,
    connected_components,
    diameter,
    is_block,
)


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: Verdict
    witness: Any = None
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.verdict is Verdict.FAIL

    def to_json(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.note:
            out["note"] = self.note
        return out


def _jsonable(w):
    if isinstance(w, dict):
        return {k: _jsonable(v) for k, v in w.items()}
    if isinstance(w, (list, tuple, set, frozenset)):
        items = [_jsonable(x) for x in w]
        return sorted(items) if isinstance(w, (set, frozenset)) else items
    return w


NECESSARY = ("palfy", "component_count", "diameter", "forbidden_p4", "cut_vertices", "block_completeness")

PASS_ANNOTATION = "necessary conditions only; passing does not decide whether this graph occurs"


@dataclass(frozen=True)
class CheckReport:
    checks: tuple[CheckResult, ...]
    annotation: str = field(default="")

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if c.name in NECESSARY and c.failed]

    @property
    def passes_necessary(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "passes_necessary_conditions": self.passes_necessary,
            "failures": self.failures,
            "annotation": self.annotation,
            "checks": [c.to_json() for c in self.checks],
        }


def check_palfy(g: Graph) -> CheckResult:
    """Among any three vertices at least one pair is adjacent (complement triangle-free)."""
    if g.n < 3:
        return CheckResult("palfy", Verdict.NOT_APPLICABLE)
    co = g.complement()
    for u, v in sorted(co.edges):
        common = co.adj[u] & co.adj[v]
        if common:
            return CheckResult("palfy", Verdict.FAIL, sorted((u, v, min(common))))
    return CheckResult("palfy", Verdict.PASS)


def check_component_count(g: Graph) -> CheckResult:
    parts = connected_components(g)
    if len(parts) <= 2:
        return CheckResult("component_count", Verdict.PASS, note=f"{len(parts)} component(s)")
    return CheckResult("component_count", Verdict.FAIL, [p[0] for p in parts[:3]], f"{len(parts)} components")


def check_diameter(g: Graph) -> CheckResult:
    """Every connected component has diameter at most 3; witness is a pair at distance > 3."""
    for s in range(g.n):
        dist = bfs(g, s)
        for t in range(s + 1, g.n):
            d = dist[t]
            if d is not INF and d > 3:  # type: ignore[operator]
                return CheckResult("diameter", Verdict.FAIL, [s, t], f"distance {d}")
    return CheckResult("diameter", Verdict.PASS)


def check_forbidden_p4(g: Graph) -> CheckResult:
    """Fails exactly when the whole graph is the path on four vertices."""
    if g.n == 4 and g.degree_sequence() == [2, 2, 1, 1] and len(connected_components(g)) == 1:
        start = min(v for v in g.vertices() if g.degree(v) == 1)
        path = [start]
        while len(path) < 4:
            path.append(next(w for w in g.adj[path[-1]] if w not in path))
        return CheckResult("forbidden_p4", Verdict.FAIL, path)
    return CheckResult("forbidden_p4", Verdict.PASS)


def check_cut_vertices(g: Graph) -> CheckResult:
    cuts = block_decomposition(g).cut_vertices
    if len(cuts) <= 1:
        return CheckResult("cut_vertices", Verdict.PASS, note=f"{len(cuts)} cut vertex/vertices")
    return CheckResult("cut_vertices", Verdict.FAIL, sorted(cuts))


def check_block_completeness(g: Graph) -> CheckResult:
    """When ``g`` is not a block and has diameter <= 2, every block must be complete."""
    if g.n < 3 or is_block(g):
        return CheckResult("block_completeness", Verdict.NOT_APPLICABLE, note="graph is a block")
    d = diameter(g)
    if d is INF or d > 2:  # type: ignore[operator]
        return CheckResult("block_completeness", Verdict.NOT_APPLICABLE, note=f"diameter {d}")
    for block in block_decomposition(g).blocks:
        vs = sorted(block)
        for u, v in combinations(vs, 2):
            if not g.has_edge(u, v):
                return CheckResult(
                    "block_completeness", Verdict.FAIL, {"block": vs, "missing_edge": [u, v]}
                )
    return CheckResult("block_completeness", Verdict.PASS)


def fitting_height_2_partition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Split the vertices of degree < n-1 into cliques ``(U, W)`` with ``U`` all of degree n-2.

    Two sets are cliques exactly when no non-edge lies inside either, so the
    search is over 2-colourings of the complement restricted to those
    vertices. Each complement component has at most two colourings; for each
    we pick the orientation that keeps ``U`` inside the degree-(n-2)
    vertices. Returns ``None`` when no valid partition exists.
    """
    n = g.n
    low = [v for v in g.vertices() if g.degree(v) < n - 1]
    co = g.complement()
    colour: dict[int, int] = {}
    U: list[int] = []
    W: list[int] = []
    for s in low:
        if s in colour:
            continue
        colour[s] = 0
        sides: tuple[list[int], list[int]] = ([s], [])
        stack = [s]
        while stack:
            u = stack.pop()
            for w in co.adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    sides[colour[w]].append(w)
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return None  # odd cycle of non-edges
        for side, other in (sides, sides[::-1]):
            if all(g.degree(v) == n - 2 for v in side):
                U.extend(side)
                W.extend(other)
                break
        else:
            return None
    return sorted(U), sorted(W)


def check_fitting_height_2(g: Graph) -> CheckResult:
    part = fitting_height_2_partition(g)
    if part is None:
        return CheckResult("fitting_height_2", Verdict.FAIL, note="no admissible two-clique partition")
    U, W = part
    return CheckResult("fitting_height_2", Verdict.PASS, {"U": U, "W": W})


CHECKS = (
    check_palfy,
    check_component_count,
    check_diameter,
    check_forbidden_p4,
    check_cut_vertices,
    check_block_completeness,
    check_fitting_height_2,
)


def full_report(g: Graph) -> CheckReport:
    results = tuple(check(g) for check in CHECKS)
    report = CheckReport(results)
    if report.passes_necessary:
        return CheckReport(results, PASS_ANNOTATION)
    return CheckReport(results, "fails at least one necessary condition")
