"""Immutable hypergraph model: construction, structural predicates, dual, 2-section.

Vertices are dense 0-based integer ids. Edges are stored as sorted tuples, and
the vertex -> edge-index incidence is precomputed at build time, so degree and
rank lookups are O(1) and the linearity check runs over incidence pairs rather
than all edge pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateVertexInEdge, FormatError, OutOfRangeVertex


@dataclass(frozen=True)
class Hypergraph:
    """Edge list over integer vertex ids plus its incidence transpose.

    Instances are immutable after build() and safe to share across workers.
    """

    num_vertices: int
    edges: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def rank(self, e: int) -> int:
        return len(self.edges[e])

    def degrees(self) -> list[int]:
        return [len(inc) for inc in self.incidence]

    def ranks(self) -> list[int]:
        return [len(e) for e in self.edges]


@dataclass(frozen=True)
class HypergraphStats:
    """Structural summary; optional fields are None when the property fails."""

    size_n: int
    num_vertices: int
    min_degree: int
    max_degree: int
    min_rank: int
    max_rank: int
    is_linear: bool
    regular_degree: int | None
    uniform_rank: int | None
    vertex_bound_N: int | None


def build(num_vertices: int, edge_list: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and normalize an edge list into a Hypergraph.

    Each edge is sorted internally; the incidence index is computed as the
    exact transpose of the edge list.
    """
    edges: list[tuple[int, ...]] = []
    incidence: list[list[int]] = [[] for _ in range(num_vertices)]
    for e_index, raw in enumerate(edge_list):
        members = list(raw)
        for v in members:
            if not 0 <= v < num_vertices:
                raise OutOfRangeVertex(
                    f"edge {e_index} contains vertex {v}, valid ids are [0, {num_vertices})"
                )
        if len(set(members)) != len(members):
            raise DuplicateVertexInEdge(f"edge {e_index} repeats a vertex: {members}")
        edge = tuple(sorted(members))
        edges.append(edge)
        for v in edge:
            incidence[v].append(e_index)
    return Hypergraph(
        num_vertices=num_vertices,
        edges=tuple(edges),
        incidence=tuple(tuple(inc) for inc in incidence),
    )


def validate_incidence(h: Hypergraph) -> bool:
    """Check that incidence is exactly the transpose of the edge list."""
    recomputed: list[list[int]] = [[] for _ in range(h.num_vertices)]
    for e_index, edge in enumerate(h.edges):
        for v in edge:
            recomputed[v].append(e_index)
    return tuple(tuple(inc) for inc in recomputed) == h.incidence


def is_linear(h: Hypergraph) -> bool:
    """True iff every pair of distinct edges shares at most one vertex.

    Runs in O(sum of degree^2) by walking incident edge pairs per vertex: a
    pair of edges meeting twice shows up at two different vertices.
    """
    seen: set[tuple[int, int]] = set()
    for inc in h.incidence:
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                pair = (inc[i], inc[j])
                if pair in seen:
                    return False
                seen.add(pair)
    return True


def regularity(h: Hypergraph) -> int | None:
    """The common vertex degree, or None if degrees differ or there are no vertices."""
    if h.num_vertices == 0:
        return None
    degs = h.degrees()
    first = degs[0]
    return first if all(d == first for d in degs) else None


def uniform_rank(h: Hypergraph) -> int | None:
    """The common edge rank, or None if ranks differ or there are no edges."""
    if not h.edges:
        return None
    first = len(h.edges[0])
    return first if all(len(e) == first for e in h.edges) else None


def dual(h: Hypergraph) -> Hypergraph:
    """Transpose roles: one dual vertex per edge, one dual edge per vertex.

    Dual edge v is exactly incidence[v], so degrees and ranks swap and
    dual(dual(h)) == h.
    """
    return build(h.num_edges, [list(inc) for inc in h.incidence])


def two_section(h: Hypergraph) -> list[set[int]]:
    """Adjacency sets of the graph joining every two vertices that share an edge."""
    adj: list[set[int]] = [set() for _ in range(h.num_vertices)]
    for edge in h.edges:
        for i in range(len(edge)):
            for j in range(i + 1, len(edge)):
                adj[edge[i]].add(edge[j])
                adj[edge[j]].add(edge[i])
    return adj


def vertex_bound(n: int, r: int) -> int:
    """Largest possible vertex count of an r-regular linear hypergraph with n edges.

    r * |V| equals the rank sum, and linearity caps every rank at
    floor((n-1)/(r-1)), so |V| <= floor(n * floor((n-1)/(r-1)) / r).
    """
    return (n * ((n - 1) // (r - 1))) // r


def stats(h: Hypergraph) -> HypergraphStats:
    degs = h.degrees()
    ranks = h.ranks()
    reg = regularity(h)
    bound = None
    if reg is not None and reg >= 3 and h.num_edges >= 1:
        bound = vertex_bound(h.num_edges, reg)
    return HypergraphStats(
        size_n=h.num_edges,
        num_vertices=h.num_vertices,
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        min_rank=min(ranks, default=0),
        max_rank=max(ranks, default=0),
        is_linear=is_linear(h),
        regular_degree=reg,
        uniform_rank=uniform_rank(h),
        vertex_bound_N=bound,
    )


# Instance files are a single JSON object:
#   {"num_vertices": <int>, "edges": [[<int>, ...], ...]}

def dumps_instance(h: Hypergraph) -> str:
    payload = {"num_vertices": h.num_vertices, "edges": [list(e) for e in h.edges]}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def loads_instance(text: str) -> Hypergraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"instance file is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise FormatError("instance file must hold a JSON object")
    try:
        num_vertices = payload["num_vertices"]
        edges = payload["edges"]
    except KeyError as exc:
        raise FormatError(f"instance file is missing field {exc}") from exc
    if not isinstance(num_vertices, int) or num_vertices < 0:
        raise FormatError("num_vertices must be a non-negative integer")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and all(isinstance(v, int) for v in e) for e in edges
    ):
        raise FormatError("edges must be an array of integer arrays")
    return build(num_vertices, edges)


def dump_instance(h: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_instance(h))


def load_instance(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_instance(fh.read())
