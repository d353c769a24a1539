"""Instance generators: projective planes, sunflowers, random linear packings.

All randomness flows through random.Random(seed), so a GeneratorSpec pins the
output byte for byte. The random constructions are rejection/greedy packings
with explicit retry budgets; they raise GenerationFailed instead of hanging.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import Hypergraph, build
from .errors import GenerationFailed, InvalidParameters, NotPrime

_RESTARTS = 100


@dataclass(frozen=True)
class GeneratorSpec:
    """A reproducible generation request: kind, kind-specific parameters, seed."""

    kind: str
    parameters: tuple[int, ...]
    seed: int = 0


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def projective_plane(q: int) -> Hypergraph:
    """Order-q projective plane from the 3-dimensional vector space mod q.

    Points are the normalized nonzero triples (first nonzero coordinate 1),
    lines are the triples' orthogonal sets; q^2+q+1 points and lines,
    (q+1)-regular, (q+1)-uniform, linear.
    """
    if not _is_prime(q):
        raise NotPrime(f"projective plane order must be prime, got {q}")
    points: list[tuple[int, int, int]] = []
    points.extend((1, y, z) for y in range(q) for z in range(q))
    points.extend((0, 1, z) for z in range(q))
    points.append((0, 0, 1))
    index = {p: i for i, p in enumerate(points)}
    edges = []
    for a, b, c in points:
        edges.append(
            [index[(x, y, z)] for (x, y, z) in points if (a * x + b * y + c * z) % q == 0]
        )
    return build(len(points), edges)


def sunflower(n: int, rank: int) -> Hypergraph:
    """n rank-`rank` edges through one core vertex with pairwise-disjoint petals."""
    if n < 2 or rank < 2:
        raise InvalidParameters(f"sunflower needs n >= 2 and rank >= 2, got ({n}, {rank})")
    num_vertices = 1 + n * (rank - 1)
    edges = [
        [0] + list(range(1 + i * (rank - 1), 1 + (i + 1) * (rank - 1)))
        for i in range(n)
    ]
    return build(num_vertices, edges)


def _grow_block(
    n: int, r: int, rank: list[int], paired: list[int], rng: random.Random
) -> list[int] | None:
    """One r-subset of edge indices whose pairs are all unused; None on failure.

    Starts at a random minimum-rank index and extends with a low-rank
    preference: a handful of random probes first, full scan as fallback.
    """
    for _ in range(4):
        lo = min(rank)
        start = rng.choice([i for i in range(n) if rank[i] == lo])
        chosen = [start]
        chosen_mask = 1 << start
        blocked = paired[start]
        while len(chosen) < r:
            best = -1
            best_rank = None
            for _ in range(12):
                i = rng.randrange(n)
                if (chosen_mask >> i) & 1 or (blocked >> i) & 1:
                    continue
                if best_rank is None or rank[i] < best_rank:
                    best, best_rank = i, rank[i]
            if best < 0:
                cands = [
                    i
                    for i in range(n)
                    if not (chosen_mask >> i) & 1 and not (blocked >> i) & 1
                ]
                if not cands:
                    break
                lo2 = min(rank[i] for i in cands)
                best = rng.choice([i for i in cands if rank[i] == lo2])
            chosen.append(best)
            chosen_mask |= 1 << best
            blocked |= paired[best]
        if len(chosen) == r:
            return chosen
    return None


def random_regular_linear(n: int, r: int, seed: int = 0, *, fill: float = 0.6) -> Hypergraph:
    """Random r-regular linear hypergraph with exactly n edges.

    Built in the dual view: each vertex is an r-subset of the edge index set
    [0, n) and any two subsets share at most one index (a partial Steiner
    packing), which makes the instance linear and exactly r-regular. The
    packing grows until it reaches `fill` of the pairwise budget
    n(n-1)/(r(r-1)) or stalls; a packing leaving any edge with rank < 2 is
    discarded and restarted.
    """
    if n < 1:
        raise InvalidParameters(f"n must be >= 1, got {n}")
    if r < 3:
        raise InvalidParameters(f"r must be >= 3, got {r}")
    if not 0.0 < fill <= 1.0:
        raise InvalidParameters(f"fill must be in (0, 1], got {fill}")
    if n < r:
        raise GenerationFailed(f"cannot pick {r} distinct edge indices out of {n}")
    rng = random.Random(seed)
    saturation = (n * (n - 1)) // (r * (r - 1))
    target = max(int(fill * saturation), -(-2 * n // r) + 2)
    for _ in range(_RESTARTS):
        rank = [0] * n
        paired = [0] * n
        blocks: list[tuple[int, ...]] = []
        fails = 0
        while len(blocks) < target and fails < 25:
            blk = _grow_block(n, r, rank, paired, rng)
            if blk is None:
                fails += 1
                continue
            fails = 0
            blocks.append(tuple(sorted(blk)))
            for i in blk:
                rank[i] += 1
            for i, j in combinations(blk, 2):
                paired[i] |= 1 << j
                paired[j] |= 1 << i
        if min(rank) >= 2:
            edges: list[list[int]] = [[] for _ in range(n)]
            for v, blk in enumerate(blocks):
                for e in blk:
                    edges[e].append(v)
            return build(len(blocks), edges)
    raise GenerationFailed(
        f"no {r}-regular linear packing with {n} edges after {_RESTARTS} restarts"
    )


def random_uniform_linear(
    num_vertices: int,
    rank: int,
    n_edges: int,
    force_high_degree: bool,
    seed: int = 0,
) -> Hypergraph:
    """Random `rank`-uniform linear hypergraph with n_edges edges.

    With force_high_degree, vertex 0 is placed on ceil(n_edges/2) edges with
    pairwise-disjoint remainders (a sunflower core) before the remaining
    edges are sampled, so the max degree is at least n_edges/2.
    """
    if rank < 2:
        raise InvalidParameters(f"rank must be >= 2, got {rank}")
    if n_edges < 0 or num_vertices < 0:
        raise InvalidParameters("num_vertices and n_edges must be non-negative")
    if rank > num_vertices:
        raise GenerationFailed(
            f"rank {rank} exceeds the {num_vertices} available vertices"
        )
    star = (n_edges + 1) // 2 if force_high_degree else 0
    if star and 1 + star * (rank - 1) > num_vertices:
        raise GenerationFailed(
            f"{star} disjoint petals of size {rank - 1} do not fit in "
            f"{num_vertices} vertices"
        )
    rng = random.Random(seed)
    for _ in range(_RESTARTS):
        paired = [0] * num_vertices
        edges: list[tuple[int, ...]] = []

        def accept(members: Sequence[int]) -> bool:
            for u, w in combinations(members, 2):
                if (paired[u] >> w) & 1:
                    return False
            for u, w in combinations(members, 2):
                paired[u] |= 1 << w
                paired[w] |= 1 << u
            return True

        if star:
            pool = list(range(1, num_vertices))
            rng.shuffle(pool)
            for i in range(star):
                petal = pool[i * (rank - 1) : (i + 1) * (rank - 1)]
                members = tuple(sorted([0] + petal))
                taken = accept(members)
                assert taken  # disjoint petals can never collide
                edges.append(members)
        stalled = False
        while len(edges) < n_edges:
            for _ in range(300):
                members = tuple(sorted(rng.sample(range(num_vertices), rank)))
                if accept(members):
                    edges.append(members)
                    break
            else:
                stalled = True
                break
        if not stalled:
            return build(num_vertices, [list(e) for e in edges])
    raise GenerationFailed(
        f"no {rank}-uniform linear packing of {n_edges} edges on "
        f"{num_vertices} vertices after {_RESTARTS} restarts"
    )


_KIND_ARITY = {
    "projective_plane": 1,
    "sunflower": 2,
    "random_regular_linear": 2,
    "random_uniform_linear": 4,
}


def generate(spec: GeneratorSpec) -> Hypergraph:
    """Dispatch a GeneratorSpec to its construction."""
    arity = _KIND_ARITY.get(spec.kind)
    if arity is None:
        raise InvalidParameters(f"unknown generator kind {spec.kind!r}")
    if len(spec.parameters) != arity:
        raise InvalidParameters(
            f"{spec.kind} takes {arity} parameters, got {len(spec.parameters)}"
        )
    p = spec.parameters
    if spec.kind == "projective_plane":
        return projective_plane(p[0])
    if spec.kind == "sunflower":
        return sunflower(p[0], p[1])
    if spec.kind == "random_regular_linear":
        return random_regular_linear(p[0], p[1], spec.seed)
    return random_uniform_linear(p[0], p[1], p[2], bool(p[3]), spec.seed)
