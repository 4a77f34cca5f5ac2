"""Independent brute-force oracles the solvers are checked against.

Everything here enumerates subsets or permutations outright and never calls
into the branch-and-bound code paths, so agreement between a solver and its
oracle is evidence, not tautology.
"""

from __future__ import annotations

import itertools

from midmatch.core import Graph


def _covered(g: Graph, subset) -> set[int]:
    out = set(subset)
    for v in subset:
        out.update(g.neighbors(v))
    return out


def _independent(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return not any(g.adjacent(u, v) for u, v in itertools.combinations(vs, 2))


def brute_isolation_number(g: Graph):
    """(value, witness): first isolating subset in size-then-lex order."""
    for k in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            rest = set(range(g.n)) - _covered(g, subset)
            if _independent(g, rest):
                return k, subset
    raise AssertionError("V itself always isolates")


def brute_isolation_number_general(g: Graph, patterns):
    for k in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            rest = sorted(set(range(g.n)) - _covered(g, subset))
            sub = _induced(g, rest)
            if not any(brute_contains_pattern(sub, h) for h in patterns):
                return k, subset
    raise AssertionError("V itself removes every pattern")


def _induced(g: Graph, vertices) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    keep = set(vertices)
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in keep and v in keep
    ]
    return Graph(len(vertices), edges)


def brute_domination_number(g: Graph):
    for k in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if len(_covered(g, subset)) == g.n:
                return k, subset
    raise AssertionError("V itself always dominates")


def brute_independence_number(g: Graph):
    for k in range(g.n, -1, -1):
        for subset in itertools.combinations(range(g.n), k):
            if _independent(g, subset):
                return k, subset
    return 0, ()


def _is_matching(edges) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def _matching_is_maximal(g: Graph, matching) -> bool:
    used = {v for e in matching for v in e}
    return not any(u not in used and v not in used for u, v in g.edges)


def brute_maximum_matching(g: Graph):
    for k in range(g.n // 2, -1, -1):
        for subset in itertools.combinations(g.edges, k):
            if _is_matching(subset):
                return k, subset
    return 0, ()


def brute_min_maximal_matching(g: Graph):
    for k in range(g.n // 2 + 1):
        for subset in itertools.combinations(g.edges, k):
            if _is_matching(subset) and _matching_is_maximal(g, subset):
                return k, subset
    raise AssertionError("a greedy maximal matching always exists")


def brute_all_maximal_matchings(g: Graph):
    out = []
    for k in range(g.n // 2 + 1):
        for subset in itertools.combinations(g.edges, k):
            if _is_matching(subset) and _matching_is_maximal(g, subset):
                out.append(tuple(sorted(subset)))
    return out


def brute_tau(g: Graph):
    """Minimum edge subset whose untouched vertices are independent."""
    for k in range(g.edge_count + 1):
        for subset in itertools.combinations(g.edges, k):
            touched = {v for e in subset for v in e}
            rest = set(range(g.n)) - touched
            if _independent(g, rest):
                return k, subset
    raise AssertionError("all edges always qualify")


def brute_contains_pattern(g: Graph, h: Graph) -> bool:
    if h.n > g.n:
        return False
    for image in itertools.permutations(range(g.n), h.n):
        if all(g.adjacent(image[u], image[v]) for u, v in h.edges):
            return True
    return False


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(
            g.adjacent(u, v) == h.adjacent(perm[u], perm[v])
            for u, v in itertools.combinations(range(g.n), 2)
        ):
            return True
    return False


def brute_canonical_key(g: Graph):
    """Minimum adjacency bit-tuple over every permutation; no pruning at all."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = tuple(
            g.adjacent(perm[i], perm[j])
            for j in range(1, g.n)
            for i in range(j)
        )
        if best is None or key < best:
            best = key
    return g.n, best


def connected_class_count_by_mask_sweep(n: int) -> int:
    """Connected isomorphism classes counted by full edge-mask sweep plus
    all-permutations dedup; independent of the catalog generator."""
    pairs = list(itertools.combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, edges)
        if g.is_connected():
            keys.add(brute_canonical_key(g))
    return len(keys)


# -- tree oracles ---------------------------------------------------------------


def decode_pruefer(seq: tuple[int, ...]) -> Graph:
    """Labeled tree on len(seq)+2 vertices; textbook smallest-leaf scan."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return Graph(n, edges)


def all_labeled_trees(n: int):
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield decode_pruefer(seq)


def ahu_encoding(t: Graph) -> str:
    """Rooted-at-centroid canonical parenthesization; tree-specific and
    entirely separate from the bit-string canonical form."""
    n = t.n
    if n == 1:
        return "()"
    parent = [-1] * n
    order = [0]
    seen = {0}
    for v in order:
        for w in t.neighbors(v):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best = n + 1
    centroids: list[int] = []
    for v in range(n):
        pieces = [size[w] for w in t.neighbors(v) if parent[w] == v]
        if parent[v] != -1:
            pieces.append(n - size[v])
        worst = max(pieces)
        if worst < best:
            best, centroids = worst, [v]
        elif worst == best:
            centroids.append(v)

    def subtree_string(root: int, up: int) -> str:
        children = sorted(
            subtree_string(c, root) for c in t.neighbors(root) if c != up
        )
        return "(" + "".join(children) + ")"

    return min(subtree_string(c, -1) for c in centroids)


def free_tree_count_by_pruefer_dedup(n: int) -> int:
    return len({ahu_encoding(t) for t in all_labeled_trees(n)})
