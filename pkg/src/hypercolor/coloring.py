"""Coloring procedures, validity checking, abort audits, exact oracle, matching.

Two constructive procedures live here:

* greedy_recolor: color vertices in a fixed order with the smallest color not
  seen on any incident edge; when the whole palette is blocked, try to move
  each blocking vertex (one level deep, never a cascade) to a color absent
  from its entire neighborhood. Aborts only when every candidate color keeps
  a vertex that cannot be moved.
* uniform_maxdeg_color: color in non-increasing degree order around the
  maximum-degree pivot, handling degree 4, 3, 2 vertices through an
  inside/outside partition of the pivot's edges and a one-swap rescue for
  stuck degree-2 vertices.

Both return rich report objects instead of raising when a run cannot finish.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import Hypergraph, regularity, two_section
from .errors import (
    FormatError,
    InvalidParameters,
    MissingVertexColor,
    NotRegular,
    TooLarge,
)


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> color map plus the count of distinct colors used."""

    assignment: dict[int, int]
    colors_used: int

    @classmethod
    def from_assignment(cls, assignment: Mapping[int, int]) -> "Coloring":
        mapping = dict(assignment)
        return cls(assignment=mapping, colors_used=len(set(mapping.values())))


@dataclass(frozen=True)
class AbortReport:
    """Certificate frozen at the moment greedy_recolor gives up.

    conflict_set_S holds one non-movable blocking vertex per palette color;
    assignment is the partial coloring at abort time.
    """

    aborted_vertex: int
    palette_size: int
    conflict_set_S: frozenset[int]
    per_color_blocker: dict[int, int]
    assignment: dict[int, int]


@dataclass(frozen=True)
class TokenAudit:
    """Recount of the charging scheme behind the abort-impossibility bound.

    Every conflict-set member places one token on each colored vertex it sees
    whose color does not appear on the edge joining it to the aborted vertex.
    """

    tokens_per_vertex: dict[int, int]
    total_tokens: int
    min_tokens_per_S_member: int
    inside_cap: int
    outside_cap: int
    member_floor: int
    inside_vertices: frozenset[int]
    tokens_placed_by: dict[int, int]


@dataclass(frozen=True)
class UniformColorState:
    """Pivot bookkeeping for uniform_maxdeg_color.

    partitions[d] = (outside, inside) for d in {4, 3, 2}: outside holds the
    degree-d vertices meeting none of the pivot's edges (colored first),
    inside the rest. The pivot itself belongs to neither side.
    """

    pivot_vertex: int
    pivot_edges: tuple[int, ...]
    partitions: dict[int, tuple[tuple[int, ...], tuple[int, ...]]]


@dataclass(frozen=True)
class FailureReport:
    """Diagnostic state when uniform_maxdeg_color has no applicable step left."""

    vertex: int
    phase: str
    palette_size: int
    state: UniformColorState
    assignment: dict[int, int]
    detail: str
    free_from_pivot_edge: frozenset[int] | None = None
    free_from_other_edge: frozenset[int] | None = None


def verify_coloring(
    h: Hypergraph, coloring: Coloring | Mapping[int, int]
) -> list[tuple[int, int, int]]:
    """Every (edge index, vertex, vertex) pair sharing a color; empty iff proper."""
    assignment = coloring.assignment if isinstance(coloring, Coloring) else coloring
    missing = [v for v in range(h.num_vertices) if v not in assignment]
    if missing:
        raise MissingVertexColor(f"vertices without a color: {missing[:10]}")
    violations = []
    for e_index, edge in enumerate(h.edges):
        for i in range(len(edge)):
            for j in range(i + 1, len(edge)):
                if assignment[edge[i]] == assignment[edge[j]]:
                    violations.append((e_index, edge[i], edge[j]))
    return violations


def _smallest_missing(seen: set[int], palette_size: int) -> int | None:
    for c in range(1, palette_size + 1):
        if c not in seen:
            return c
    return None


def greedy_recolor(
    h: Hypergraph, palette_size: int, order: Sequence[int] | None = None
) -> Coloring | AbortReport:
    """Greedy coloring with a one-level recolor fallback over a fixed palette.

    Each vertex takes the smallest palette color absent from its incident
    edges. If all colors are present, candidate colors are scanned in
    ascending order: color c is usable when every vertex currently holding c
    in the neighborhood can itself move to a color absent from its own whole
    neighborhood; all such moves are applied, then c is assigned. Returns an
    AbortReport when every candidate color is pinned by some non-movable
    vertex. Ties break to smallest color, then smallest vertex id.
    """
    if palette_size < 0:
        raise InvalidParameters(f"palette_size must be >= 0, got {palette_size}")
    if order is None:
        sequence = range(h.num_vertices)
    else:
        sequence = list(order)
        if sorted(sequence) != list(range(h.num_vertices)):
            raise InvalidParameters("order must be a permutation of all vertex ids")
    col: dict[int, int] = {}
    for v in sequence:
        seen = {
            col[u]
            for e in h.incidence[v]
            for u in h.edges[e]
            if u in col
        }
        c = _smallest_missing(seen, palette_size)
        if c is not None:
            col[v] = c
            continue
        blocker_for_color: dict[int, int] = {}
        placed = False
        for cand in range(1, palette_size + 1):
            blockers = sorted(
                {u for e in h.incidence[v] for u in h.edges[e] if col.get(u) == cand}
            )
            # proper partial coloring: at most one holder of cand per incident edge
            assert len(blockers) <= h.degree(v)
            moves: dict[int, int] = {}
            stuck = None
            for k in blockers:
                k_seen = {
                    col[u]
                    for e in h.incidence[k]
                    for u in h.edges[e]
                    if u in col
                }
                ck = _smallest_missing(k_seen, palette_size)
                if ck is None:
                    stuck = k
                    break
                moves[k] = ck
            if stuck is None:
                # moves were computed against the pre-move state; blockers are
                # pairwise non-adjacent (all hold cand), so applying them
                # together cannot create a conflict
                col.update(moves)
                col[v] = cand
                placed = True
                break
            blocker_for_color[cand] = stuck
        if not placed:
            return AbortReport(
                aborted_vertex=v,
                palette_size=palette_size,
                conflict_set_S=frozenset(blocker_for_color.values()),
                per_color_blocker=blocker_for_color,
                assignment=dict(col),
            )
    return Coloring.from_assignment(col)


def token_audit(h: Hypergraph, abort: AbortReport) -> TokenAudit:
    """Recompute the token placements certified by an AbortReport.

    For each conflict-set member v, the edge joining v to the aborted vertex
    is unique (linearity); v places one token on every colored vertex in its
    own edges whose color is absent from that joining edge.
    """
    r = regularity(h)
    if r is None:
        raise NotRegular("token caps are only defined for regular hypergraphs")
    col = abort.assignment
    vi = abort.aborted_vertex
    tokens = {u: 0 for u in range(h.num_vertices)}
    placed_by: dict[int, int] = {}
    for v in sorted(abort.conflict_set_S):
        joining = [e for e in h.incidence[v] if vi in h.edges[e]]
        assert len(joining) == 1, "conflict member must meet the aborted vertex once"
        joining_colors = {col[u] for u in h.edges[joining[0]] if u in col}
        count = 0
        for u in {
            u for e in h.incidence[v] for u in h.edges[e] if u != v and u in col
        }:
            if col[u] not in joining_colors:
                tokens[u] += 1
                count += 1
        placed_by[v] = count
    inside = frozenset(u for e in h.incidence[vi] for u in h.edges[e])
    max_rank = max(h.ranks(), default=0)
    return TokenAudit(
        tokens_per_vertex=tokens,
        total_tokens=sum(tokens.values()),
        min_tokens_per_S_member=min(placed_by.values(), default=0),
        inside_cap=(r - 1) ** 2,
        outside_cap=r * (r - 1),
        member_floor=abort.palette_size - max_rank,
        inside_vertices=inside,
        tokens_placed_by=placed_by,
    )


def _free_colors(
    h: Hypergraph, e: int, col: Mapping[int, int], palette: int, skip: int | None = None
) -> set[int]:
    """Palette colors absent from edge e's colored vertices (optionally ignoring one)."""
    used = {col[u] for u in h.edges[e] if u in col and u != skip}
    return {c for c in range(1, palette + 1) if c not in used}


def swap_rescue_b2(
    h: Hypergraph,
    u: int,
    e_i: int,
    e_j: int,
    col: dict[int, int],
    palette: int,
) -> bool:
    """Free a color for the degree-2 vertex u on edges e_i, e_j by one recolor.

    Looks for colored degree-2 vertices p in e_i and q in e_j sharing a third
    edge e_k, with p's color free from e_j and q's color free from e_i. Moving
    p (or q) to a color clear of both of its edges releases its old color for
    u. Mutates col and returns True on success.
    """
    degrees = h.degrees()
    x = _free_colors(h, e_i, col, palette)
    y = _free_colors(h, e_j, col, palette)
    movers_p = sorted(
        p for p in h.edges[e_i] if p in col and degrees[p] == 2 and col[p] in y
    )
    movers_q = sorted(
        q for q in h.edges[e_j] if q in col and degrees[q] == 2 and col[q] in x
    )
    for p in movers_p:
        for q in movers_q:
            for e_k in sorted(set(h.incidence[p]) & set(h.incidence[q])):
                if e_k == e_i or e_k == e_j:
                    continue
                # p's edges are exactly {e_i, e_k}: a new color from x clear
                # of e_k keeps p proper and releases col[p] for u
                for mover, freed_pool in ((p, x), (q, y)):
                    new_colors = freed_pool - {
                        col[w] for w in h.edges[e_k] if w in col and w != mover
                    }
                    if new_colors:
                        freed = col[mover]
                        col[mover] = min(new_colors)
                        col[u] = freed
                        return True
    return False


def build_uniform_state(h: Hypergraph) -> UniformColorState:
    """Pick the pivot (max degree, smallest id) and partition degree 4/3/2 vertices."""
    if h.num_vertices == 0:
        raise InvalidParameters("state is undefined for a hypergraph with no vertices")
    degrees = h.degrees()
    pivot = min(range(h.num_vertices), key=lambda v: (-degrees[v], v))
    pivot_edges = set(h.incidence[pivot])
    partitions: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for d in (4, 3, 2):
        outside = []
        inside = []
        for v in range(h.num_vertices):
            if v == pivot or degrees[v] != d:
                continue
            if any(e in pivot_edges for e in h.incidence[v]):
                inside.append(v)
            else:
                outside.append(v)
        partitions[d] = (tuple(outside), tuple(inside))
    return UniformColorState(
        pivot_vertex=pivot,
        pivot_edges=tuple(h.incidence[pivot]),
        partitions=partitions,
    )


def uniform_maxdeg_color(h: Hypergraph) -> Coloring | FailureReport:
    """Max-degree-first coloring of a uniform linear hypergraph in floor(1.25 n) colors.

    Phases, in order: the pivot; vertices of degree >= 5 by non-increasing
    degree; for d in {4, 3, 2} the vertices outside all pivot edges, then
    those inside; degree <= 1 vertices last. Every phase assigns the smallest
    free color. A stuck inside degree-2 vertex u on pivot edge E_i and second
    edge E_j triggers the swap rescue: find colored degree-2 vertices p in
    E_i, q in E_j sharing an edge E_k, with p's color free from E_j and q's
    color free from E_i, and move one of them off E_k's colors to release a
    color for u. Returns a FailureReport when no step applies.
    """
    if h.num_vertices == 0:
        return Coloring.from_assignment({})
    n = h.num_edges
    palette = (5 * n) // 4
    state = build_uniform_state(h)
    degrees = h.degrees()
    col: dict[int, int] = {}

    def free_from(e: int) -> set[int]:
        return _free_colors(h, e, col, palette)

    def available(v: int) -> int | None:
        seen = {col[u] for e in h.incidence[v] for u in h.edges[e] if u in col}
        return _smallest_missing(seen, palette)

    def fail(
        v: int,
        phase: str,
        detail: str,
        x: frozenset[int] | None = None,
        y: frozenset[int] | None = None,
    ) -> FailureReport:
        return FailureReport(
            vertex=v,
            phase=phase,
            palette_size=palette,
            state=state,
            assignment=dict(col),
            detail=detail,
            free_from_pivot_edge=x,
            free_from_other_edge=y,
        )

    def color_b2(u: int) -> FailureReport | None:
        pivot_edges = set(state.pivot_edges)
        own = list(h.incidence[u])
        on_pivot = [e for e in own if e in pivot_edges]
        assert len(on_pivot) == 1, "inside degree-2 vertex must meet one pivot edge"
        e_i = on_pivot[0]
        e_j = next(e for e in own if e != e_i)
        x = free_from(e_i)
        y = free_from(e_j)
        common = x & y
        if common:
            col[u] = min(common)
            return None
        if swap_rescue_b2(h, u, e_i, e_j, col, palette):
            return None
        retry = free_from(e_i) & free_from(e_j)
        if retry:
            col[u] = min(retry)
            return None
        return fail(
            u,
            "B_2",
            "no common free color and no movable degree-2 pair",
            frozenset(x),
            frozenset(y),
        )

    pivot = state.pivot_vertex
    c = available(pivot)
    if c is None:
        return fail(pivot, "pivot", "palette exhausted before the first vertex")
    col[pivot] = c

    high = sorted(
        (v for v in range(h.num_vertices) if v != pivot and degrees[v] >= 5),
        key=lambda v: (-degrees[v], v),
    )
    for v in high:
        c = available(v)
        if c is None:
            return fail(v, "degree>=5", "no free color")
        col[v] = c

    for d in (4, 3, 2):
        outside, inside = state.partitions[d]
        for v in outside:
            c = available(v)
            if c is None:
                return fail(v, f"A_{d}", "no free color")
            col[v] = c
        if d > 2:
            for v in inside:
                c = available(v)
                if c is None:
                    return fail(v, f"B_{d}", "no free color")
                col[v] = c
        else:
            for u in inside:
                report = color_b2(u)
                if report is not None:
                    return report

    low = sorted(
        (v for v in range(h.num_vertices) if v != pivot and degrees[v] <= 1),
        key=lambda v: (-degrees[v], v),
    )
    for v in low:
        c = available(v)
        if c is None:
            return fail(v, "degree<=1", "no free color")
        col[v] = c

    return Coloring.from_assignment(col)


def exact_chromatic(h: Hypergraph, vertex_cap: int = 20) -> int:
    """Exact minimum color count of h, via branch and bound on its 2-section.

    Parameters
    ----------
    h : Hypergraph
        Instance to solve; coloring h properly is the same problem as
        properly coloring its 2-section graph.
    vertex_cap : int
        Refuse instances with more vertices than this (TooLarge).

    Returns
    -------
    int
        The exact chromatic number; 0 for an empty vertex set.
    """
    chi, _ = _exact_chromatic_witness(h, vertex_cap)
    return chi


def _exact_chromatic_witness(h: Hypergraph, vertex_cap: int) -> tuple[int, dict[int, int]]:
    if h.num_vertices > vertex_cap:
        raise TooLarge(
            f"{h.num_vertices} vertices exceed the exact solver cap {vertex_cap}"
        )
    n = h.num_vertices
    if n == 0:
        return 0, {}
    adj = two_section(h)

    # greedy upper bound, largest degree first
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    greedy = [0] * n
    for v in order:
        taken = {greedy[u] for u in adj[v] if greedy[u]}
        c = 1
        while c in taken:
            c += 1
        greedy[v] = c
    best_num = max(greedy)
    best_assign = greedy[:]

    # greedy clique lower bound
    clique: list[int] = []
    for v in order:
        if all(v in adj[u] for u in clique):
            clique.append(v)
    lower = max(len(clique), 1)
    if lower >= best_num:
        return best_num, {v: best_assign[v] for v in range(n)}

    colors = [0] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]

    def select() -> int:
        pick, key = -1, (-1, -1, 0)
        for v in range(n):
            if colors[v] == 0:
                cand = (len(neighbor_colors[v]), len(adj[v]), -v)
                if cand > key:
                    pick, key = v, cand
        return pick

    def backtrack(colored: int, used: int) -> None:
        nonlocal best_num, best_assign
        if used >= best_num:
            return
        if colored == n:
            best_num = used
            best_assign = colors[:]
            return
        v = select()
        for c in range(1, min(used + 1, best_num - 1) + 1):
            if c in neighbor_colors[v]:
                continue
            colors[v] = c
            touched = []
            for u in adj[v]:
                if colors[u] == 0 and c not in neighbor_colors[u]:
                    neighbor_colors[u].add(c)
                    touched.append(u)
            backtrack(colored + 1, max(used, c))
            for u in touched:
                neighbor_colors[u].discard(c)
            colors[v] = 0
            if best_num <= lower:
                return

    backtrack(0, 0)
    return best_num, {v: best_assign[v] for v in range(n)}


def efl_check(h: Hypergraph) -> tuple[bool, Coloring | None]:
    """Try to color h with at most as many colors as it has edges.

    True means a witness was found (greedy first, exact oracle for small
    instances); False only means this artifact found none.
    """
    n = h.num_edges
    result = greedy_recolor(h, n)
    if isinstance(result, Coloring):
        return True, result
    if h.num_vertices <= 20:
        chi, assignment = _exact_chromatic_witness(h, 20)
        if chi <= n:
            return True, Coloring.from_assignment(assignment)
    return False, None


def matching_lower_bound(h: Hypergraph) -> int:
    """Number of pairwise-disjoint edges: exact for <= 20 edges, greedy beyond."""
    edge_sets = [frozenset(e) for e in h.edges]
    if len(edge_sets) > 20:
        taken: set[int] = set()
        count = 0
        for e in edge_sets:
            if not (e & taken):
                taken |= e
                count += 1
        return count
    best = 0

    def explore(i: int, used: frozenset[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        if i == len(edge_sets) or size + (len(edge_sets) - i) <= best:
            return
        if not (edge_sets[i] & used):
            explore(i + 1, used | edge_sets[i], size + 1)
        explore(i + 1, used, size)

    explore(0, frozenset(), 0)
    return best


def dumps_coloring(coloring: Coloring | Mapping[int, int]) -> str:
    """Serialize a coloring as a JSON object keyed by vertex id strings."""
    assignment = coloring.assignment if isinstance(coloring, Coloring) else coloring
    ordered = {str(v): assignment[v] for v in sorted(assignment)}
    return json.dumps(ordered, separators=(",", ":")) + "\n"


def loads_coloring(text: str) -> dict[int, int]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"coloring file is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise FormatError("coloring file must hold a JSON object")
    out: dict[int, int] = {}
    for key, value in payload.items():
        try:
            vertex = int(key)
        except ValueError as exc:
            raise FormatError(f"coloring key {key!r} is not a vertex id") from exc
        if not isinstance(value, int) or value < 1:
            raise FormatError(f"color for vertex {key} must be a positive integer")
        out[vertex] = value
    return out


def dump_coloring(coloring: Coloring | Mapping[int, int], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_coloring(coloring))


def load_coloring(path: str) -> dict[int, int]:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_coloring(fh.read())
