"""Closed-form game chromatic numbers for forests, with a solver fallback."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .forest import (
    Forest,
    Position,
    component_diameter,
    covering_vertex,
    longest_path_length,
    path_between,
    reduced_graph,
)
from .solver import game_chromatic_number_detail

CLOSED_FORM = "closed-form"
THEOREM_CAPPED = "theorem-capped"
SOLVER = "solver"


@dataclass(frozen=True)
class Classification:
    value: int
    method: str
    rule: str
    b_vertex: Optional[int] = None
    detail: dict = field(default_factory=dict, compare=False)

    def __str__(self):
        if self.method == CLOSED_FORM:
            return f"{self.value} ({self.method}: {self.rule})"
        return f"{self.value} ({self.method})"


def is_chi_g_2(f: Forest) -> tuple[bool, str]:
    """Exact test for game chromatic number 2, with the clause that decided it."""
    ell = longest_path_length(f)
    if 1 <= ell <= 2:
        return True, f"longest path has length {ell}"
    if ell < 1:
        return False, "no edges"
    if ell > 3:
        return False, f"longest path has length {ell} > 3"
    if f.n % 2 == 0:
        return False, "longest path 3 but even vertex count"
    for comp in f.components:
        if len(comp) > 1 and component_diameter(f, comp) == 3:
            if any(f.degrees[v] > 2 for v in comp):
                return False, f"diameter-3 component at {comp[0]} is not a path"
    return True, "longest path 3, odd order, every diameter-3 component is a path"


def reduced_trunk_violation(p: Position):
    """First reduced trunk that is neither (one colored vertex, no edge between
    two degree->2 vertices) nor (uncolored with a vertex covering all such edges)."""
    for r in reduced_graph(p).trunks():
        k = len(r.colored)
        if k == 1 and not r.e_ggt2():
            continue
        if k == 0 and covering_vertex(r) is not None:
            continue
        return r
    return None


def b_vertex_ok(f: Forest, b: int) -> bool:
    # the structure does not depend on which color b gets
    return reduced_trunk_violation(Position(f).with_color(b, 0)) is None


def b_vertex_bruteforce(f: Forest) -> Optional[int]:
    return next((b for b in f.vertices if b_vertex_ok(f, b)), None)


def _span(f: Forest, e1, e2) -> set:
    out = set()
    for a in e1:
        for c in e2:
            out.update(path_between(f, a, c))
    return out


def b_vertex_candidates(f: Forest) -> Optional[list]:
    """Vertices that can possibly serve as b; ``None`` when none can.

    Only uncolored reduced trunks lacking a covering vertex constrain b: two
    of them rule b out, one of them confines b to the span of every pair of
    vertex-disjoint edges inside it.
    """
    rg = reduced_graph(Position(f))
    uncovered = [r for r in rg.trunks() if covering_vertex(r) is None]
    if len(uncovered) >= 2:
        return None
    if not uncovered:
        return list(f.vertices)
    edges = uncovered[0].e_ggt2()
    cand = None
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1 :]:
            if set(e1) & set(e2):
                continue
            s = _span(f, e1, e2)
            cand = s if cand is None else cand & s
    return sorted(cand)


def b_vertex_search(f: Forest) -> Optional[int]:
    """Lowest-id vertex whose coloring leaves every reduced trunk safe, or ``None``."""
    cand = b_vertex_candidates(f)
    if cand is None:
        return None
    return next((b for b in cand if b_vertex_ok(f, b)), None)


def _trivial(f: Forest) -> Optional[Classification]:
    if f.n == 0:
        return Classification(0, CLOSED_FORM, "empty forest")
    if not f.edges:
        return Classification(1, CLOSED_FORM, "edgeless forest")
    ok, why = is_chi_g_2(f)
    if ok:
        return Classification(2, CLOSED_FORM, "chi_g = 2 characterization", detail={"clause": why})
    return None


def classify_no_deg3(f: Forest) -> Classification:
    if 3 in f.degrees:
        raise ValueError("forest has a vertex of degree 3")
    c = _trivial(f)
    if c is not None:
        return c
    b = b_vertex_search(f)
    if b is None:
        return Classification(4, CLOSED_FORM, "degree-3-free dichotomy: no b-vertex")
    return Classification(3, CLOSED_FORM, "degree-3-free dichotomy: b-vertex exists", b_vertex=b)


def classify(f: Forest, allow_solver: bool = True) -> Classification:
    c = _trivial(f)
    if c is not None:
        return c
    if 3 not in f.degrees:
        return classify_no_deg3(f)
    b = b_vertex_search(f)
    if b is not None:
        return Classification(3, CLOSED_FORM, "b-vertex sufficient condition", b_vertex=b)
    if f.n <= 13:
        return Classification(3, CLOSED_FORM, "at most 13 vertices")
    if not allow_solver:
        raise LookupError("no closed-form rule applies and the solver fallback is disabled")
    res = game_chromatic_number_detail(f)
    method = THEOREM_CAPPED if res.capped else SOLVER
    return Classification(res.value, method, "exact search")
