"""Isomorph-free catalogs of small trees and connected graphs.

The canonical form of a graph is the lexicographically smallest adjacency
bit-string over relabelings that list vertices in a refinement-stable color
order, rendered as a graph6 string. Guaranteed fast up to around ten
vertices for general graphs and more for trees; the searches collapse twin
vertices (interchangeable by a transposition) into a single branch.

Random generators run on an explicit splitmix64 stream so identical seeds
reproduce identical graphs in any implementation of the same scheme.
"""

from __future__ import annotations

import heapq
from typing import Iterator, Sequence

from .core import Graph, bits, parse_graph6, to_graph6

TREE_ENUM_CAP = 12
GRAPH_ENUM_CAP = 7
SLOW_GRAPH_ORDER = 7
RANDOM_ORDER_CAP = 16

_MASK64 = (1 << 64) - 1


class GenerationError(RuntimeError):
    """Rejection sampling exhausted its retry budget."""


# -- canonical labeling ---------------------------------------------------------


def _stable_colors(g: Graph) -> tuple[int, ...]:
    """Iterated neighborhood refinement; color ids are relabeling-invariant."""
    ranks = {d: r for r, d in enumerate(sorted({m.bit_count() for m in g.adj}))}
    colors = [ranks[g.adj[v].bit_count()] for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        order = {s: r for r, s in enumerate(sorted(set(sigs)))}
        refined = [order[s] for s in sigs]
        if refined == colors:
            return tuple(colors)
        colors = refined


def _twins(adj: tuple[int, ...], a: int, b: int) -> bool:
    # swapping a and b is an automorphism
    return adj[a] & ~(1 << b) == adj[b] & ~(1 << a)


def canonical_form(g: Graph) -> str:
    """Canonical graph6 signature: equal strings iff isomorphic graphs."""
    n = g.n
    if n == 0:
        return to_graph6(g)
    colors = _stable_colors(g)
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(colors[v], []).append(v)
    position_color = []
    for c in sorted(blocks):
        position_color.extend([c] * len(blocks[c]))
    adj = g.adj

    def rec(placed: list[int], placed_mask: int) -> list[int]:
        t = len(placed)
        if t == n:
            return []
        cands = [v for v in blocks[position_color[t]] if not placed_mask >> v & 1]
        rows = {}
        for v in cands:
            r = 0
            for p in placed:
                r = r << 1 | (adj[v] >> p & 1)
            rows[v] = r
        m = min(rows.values())
        ties = [v for v in cands if rows[v] == m]
        pruned: list[int] = []
        for v in ties:
            if not any(_twins(adj, v, w) for w in pruned):
                pruned.append(v)
        best: list[int] | None = None
        for v in pruned:
            suffix = rec(placed + [v], placed_mask | 1 << v)
            if best is None or suffix < best:
                best = suffix
        assert best is not None
        return [m] + best

    rows = rec([], 0)
    masks = [0] * n
    for t, row in enumerate(rows):
        for i in range(t):
            if row >> (t - 1 - i) & 1:
                masks[t] |= 1 << i
                masks[i] |= 1 << t
    return to_graph6(Graph.from_masks(tuple(masks)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(m.bit_count() for m in g.adj) != sorted(m.bit_count() for m in h.adj):
        return False
    return canonical_form(g) == canonical_form(h)


# -- isomorph-free generation ----------------------------------------------------

_all_graphs_cache: dict[int, list[Graph]] = {}


def _all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of all graphs on n vertices."""
    if n in _all_graphs_cache:
        return _all_graphs_cache[n]
    if n == 1:
        reps = [Graph(1)]
    else:
        seen: dict[str, None] = {}
        for base in _all_graphs(n - 1):
            for sub in range(1 << (n - 1)):
                extra = tuple((v, n - 1) for v in bits(sub))
                seen.setdefault(canonical_form(Graph(n, base.edges + extra)))
        reps = [parse_graph6(c) for c in sorted(seen)]
    _all_graphs_cache[n] = reps
    return reps


def all_connected_graphs(n: int, allow_slow: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Order 7 takes several seconds and must be opted into with ``allow_slow``.
    """
    if not 1 <= n <= GRAPH_ENUM_CAP:
        raise ValueError(f"connected-graph catalog supports 1..{GRAPH_ENUM_CAP}")
    if n >= SLOW_GRAPH_ORDER and not allow_slow:
        raise ValueError(f"n={n} is long-running; pass allow_slow=True")
    if n == 1:
        yield Graph(1)
        return
    seen: dict[str, None] = {}
    for base in _all_graphs(n - 1):
        for sub in range(1, 1 << (n - 1)):
            extra = tuple((v, n - 1) for v in bits(sub))
            g = Graph(n, base.edges + extra)
            if g.is_connected():
                seen.setdefault(canonical_form(g))
    for c in sorted(seen):
        yield parse_graph6(c)


def all_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of free trees on n vertices."""
    if not 1 <= n <= TREE_ENUM_CAP:
        raise ValueError(f"tree catalog supports 1..{TREE_ENUM_CAP}")
    level = [Graph(1)]
    for k in range(2, n + 1):
        seen: dict[str, None] = {}
        for t in level:
            for v in range(t.n):
                grown = Graph(k, t.edges + ((v, k - 1),))
                seen.setdefault(canonical_form(grown))
        level = [parse_graph6(c) for c in sorted(seen)]
    yield from level


# -- seeded randomness ------------------------------------------------------------


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; output mixes with two xorshifts."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def unit(self) -> float:
        # 53-bit mantissa in [0, 1)
        return (self.next64() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        # modulo bias is below 2**-57 for n <= 64
        return self.next64() % n


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence; deterministic in seed."""
    if not 1 <= n <= RANDOM_ORDER_CAP:
        raise ValueError(f"random trees support 1..{RANDOM_ORDER_CAP} vertices")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = SplitMix64(seed)
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((min(v, x), max(v, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return Graph(n, edges)


def random_connected_graph(
    n: int, edge_probability: float, seed: int, max_attempts: int = 10_000
) -> Graph:
    """Bernoulli edges resampled until connected; deterministic in seed."""
    if not 1 <= n <= RANDOM_ORDER_CAP:
        raise ValueError(f"random graphs support 1..{RANDOM_ORDER_CAP} vertices")
    if not 0 < edge_probability <= 1:
        raise ValueError("edge_probability must be in (0, 1]")
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.unit() < edge_probability
        ]
        g = Graph(n, edges)
        if g.is_connected():
            return g
    raise GenerationError(
        f"no connected sample in {max_attempts} attempts (n={n}, p={edge_probability})"
    )


def random_connected_corpus(
    count: int, sizes: Sequence[int], seed: int, edge_probability: float = 0.3
) -> Iterator[Graph]:
    """Deterministic stream of seeded random connected graphs, cycling sizes."""
    for i in range(count):
        yield random_connected_graph(
            sizes[i % len(sizes)], edge_probability, seed + i
        )
