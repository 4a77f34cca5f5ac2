"""Exact solvers for isolation, domination, independence and matching invariants.

Each optimizer returns a :class:`WitnessedValue` whose witness re-validates
against the defining predicate. Ties among optimal witnesses break toward the
lexicographically smallest sorted member list, so certificates are stable
across runs. All searches are depth-budgeted branch-and-bound procedures;
independent brute-force oracles live in the test suite and stay there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .core import Graph, bits, mask_of
from .middle import MiddleGraph

Edge = tuple[int, int]


@dataclass(frozen=True)
class WitnessedValue:
    """An exact invariant together with a set attaining it."""

    value: int
    witness: tuple

    def __int__(self) -> int:
        return self.value


# -- vertex-set predicates ----------------------------------------------------


def _vertex_mask(g: Graph, vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        m |= 1 << v
    return m


def is_isolating(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the vertices outside the closed neighborhood are independent."""
    covered = g.closed_neighborhood_mask(_vertex_mask(g, vertices))
    rest = g.vertex_mask() & ~covered
    return g.is_independent_mask(rest)


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    covered = g.closed_neighborhood_mask(_vertex_mask(g, vertices))
    return covered == g.vertex_mask()


# -- shared minimization scaffolding -------------------------------------------

# A feasibility function answers: does a witness exist that contains every
# vertex of `fixed`, takes all further vertices from `allowed`, and adds at
# most `budget` of them? Minimizers iterate the budget upward for the value,
# then rebuild the witness greedily so it is the lexicographically smallest.
VertexFeasible = Callable[[int, int, int], bool]


def _minimize_vertex_set(n: int, feasible: VertexFeasible) -> WitnessedValue:
    all_mask = (1 << n) - 1
    k = 0
    while not feasible(0, all_mask, k):
        k += 1
    witness: list[int] = []
    fixed = 0
    floor = 0
    for _ in range(k):
        for c in range(floor, n):
            above = all_mask & ~((1 << (c + 1)) - 1)
            if feasible(fixed | 1 << c, above, k - len(witness) - 1):
                witness.append(c)
                fixed |= 1 << c
                floor = c + 1
                break
        else:
            raise AssertionError("witness reconstruction must succeed")
    return WitnessedValue(k, tuple(witness))


def _first_uncovered_edge(adj: tuple[int, ...], rest: int) -> Edge | None:
    r = rest
    while r:
        low = r & -r
        u = low.bit_length() - 1
        hit = adj[u] & rest
        if hit:
            return u, (hit & -hit).bit_length() - 1
        r ^= low
    return None


def isolation_number(g: Graph) -> WitnessedValue:
    """Smallest set whose closed neighborhood leaves an independent remainder.

    Branching rule: while some edge survives outside the covered region, one
    endpoint must fall into the closed neighborhood of the set, so the set
    must meet the union of both endpoints' closed neighborhoods.
    """
    adj = g.adj
    all_mask = g.vertex_mask()
    closed = tuple(adj[v] | 1 << v for v in range(g.n))

    def extend(s_mask: int, covered: int, allowed: int, budget: int) -> bool:
        pick = _first_uncovered_edge(adj, all_mask & ~covered)
        if pick is None:
            return True
        if budget == 0:
            return False
        u, v = pick
        for w in bits((closed[u] | closed[v]) & allowed & ~s_mask):
            if extend(s_mask | 1 << w, covered | closed[w], allowed, budget - 1):
                return True
        return False

    def feasible(fixed: int, allowed: int, budget: int) -> bool:
        return extend(fixed, g.closed_neighborhood_mask(fixed), allowed, budget)

    return _minimize_vertex_set(g.n, feasible)


def domination_number(g: Graph) -> WitnessedValue:
    """Smallest set whose closed neighborhood is the whole vertex set."""
    all_mask = g.vertex_mask()
    closed = tuple(g.adj[v] | 1 << v for v in range(g.n))

    def extend(s_mask: int, covered: int, allowed: int, budget: int) -> bool:
        rest = all_mask & ~covered
        if not rest:
            return True
        if budget == 0:
            return False
        u = (rest & -rest).bit_length() - 1
        for w in bits(closed[u] & allowed & ~s_mask):
            if extend(s_mask | 1 << w, covered | closed[w], allowed, budget - 1):
                return True
        return False

    def feasible(fixed: int, allowed: int, budget: int) -> bool:
        return extend(fixed, g.closed_neighborhood_mask(fixed), allowed, budget)

    return _minimize_vertex_set(g.n, feasible)


def independence_number(g: Graph) -> WitnessedValue:
    """Largest set spanning no edge, with the lexicographically smallest witness."""
    adj = g.adj
    memo: dict[int, int] = {}

    def alpha(alive: int) -> int:
        if not alive:
            return 0
        if alive in memo:
            return memo[alive]
        v = max(bits(alive), key=lambda x: ((adj[x] & alive).bit_count(), x))
        nbrs = adj[v] & alive
        take = 1 + alpha(alive & ~(nbrs | 1 << v))
        res = take if not nbrs else max(take, alpha(alive & ~(1 << v)))
        memo[alive] = res
        return res

    target = alpha(g.vertex_mask())
    witness: list[int] = []
    excluded_closed = 0
    floor = 0
    for _ in range(target):
        for c in range(floor, g.n):
            if excluded_closed >> c & 1:
                continue
            above = g.vertex_mask() & ~((1 << (c + 1)) - 1)
            alive = above & ~(excluded_closed | adj[c])
            if 1 + len(witness) + alpha(alive) >= target:
                witness.append(c)
                excluded_closed |= adj[c] | 1 << c
                floor = c + 1
                break
        else:
            raise AssertionError("witness reconstruction must succeed")
    return WitnessedValue(target, tuple(witness))


# -- matchings ----------------------------------------------------------------


def _validate_matching(g: Graph, matching: Iterable[Edge]) -> tuple[Edge, ...]:
    edge_set = set(g.edges)
    seen = 0
    out = []
    for u, v in matching:
        e = (min(u, v), max(u, v))
        if e not in edge_set:
            raise ValueError(f"({u},{v}) is not an edge of the graph")
        mask = 1 << e[0] | 1 << e[1]
        if seen & mask:
            raise ValueError(f"edges share endpoint at ({u},{v}); not a matching")
        seen |= mask
        out.append(e)
    return tuple(sorted(out))


def matched_mask(matching: Iterable[Edge]) -> int:
    m = 0
    for u, v in matching:
        m |= 1 << u | 1 << v
    return m


def is_maximal_matching(g: Graph, matching: Iterable[Edge]) -> bool:
    """True iff no graph edge has both endpoints unmatched."""
    covered = matched_mask(_validate_matching(g, matching))
    return _first_uncovered_edge(g.adj, g.vertex_mask() & ~covered) is None


def is_perfect_matching(g: Graph, matching: Iterable[Edge]) -> bool:
    return matched_mask(_validate_matching(g, matching)).bit_count() == g.n


def is_near_perfect_matching(g: Graph, matching: Iterable[Edge]) -> bool:
    return matched_mask(_validate_matching(g, matching)).bit_count() == g.n - 1


def maximum_matching(g: Graph) -> WitnessedValue:
    """A maximum-cardinality matching."""
    adj = g.adj

    def nu(alive: int, memo: dict[int, int]) -> int:
        pick = _first_uncovered_edge(adj, alive)
        if pick is None:
            return 0
        if alive in memo:
            return memo[alive]
        u, _ = pick
        best = nu(alive & ~(1 << u), memo)
        for v in bits(adj[u] & alive):
            best = max(best, 1 + nu(alive & ~(1 << u | 1 << v), memo))
        memo[alive] = best
        return best

    target = nu(g.vertex_mask(), {})
    witness: list[Edge] = []
    used = 0
    last: Edge | None = None
    for _ in range(target):
        for e in g.edges:
            u, v = e
            if last is not None and e <= last:
                continue
            if used & (1 << u | 1 << v):
                continue
            rest = _restrict_adj(g, used | 1 << u | 1 << v, e)
            if 1 + len(witness) + _nu_filtered(rest) >= target:
                witness.append(e)
                used |= 1 << u | 1 << v
                last = e
                break
        else:
            raise AssertionError("witness reconstruction must succeed")
    return WitnessedValue(target, tuple(witness))


def _restrict_adj(g: Graph, used: int, bound: Edge | None) -> tuple[int, ...]:
    """Adjacency keeping only edges lexicographically above ``bound`` that avoid ``used``."""
    masks = [0] * g.n
    for e in g.edges:
        if bound is not None and e <= bound:
            continue
        u, v = e
        if used & (1 << u | 1 << v):
            continue
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def _mask_from_adj(masks: tuple[int, ...]) -> int:
    m = 0
    for v, a in enumerate(masks):
        if a:
            m |= 1 << v
    return m


def _nu_filtered(masks: tuple[int, ...]) -> int:
    memo: dict[int, int] = {}

    def nu(alive: int) -> int:
        pick = _first_uncovered_edge(masks, alive)
        if pick is None:
            return 0
        if alive in memo:
            return memo[alive]
        u, _ = pick
        best = nu(alive & ~(1 << u))
        for v in bits(masks[u] & alive):
            best = max(best, 1 + nu(alive & ~(1 << u | 1 << v)))
        memo[alive] = best
        return best

    return nu(_mask_from_adj(masks))


def min_maximal_matching(g: Graph) -> WitnessedValue:
    """Smallest maximal matching (equivalently, a minimum independent edge
    dominating set).

    Branching rule: pick the first edge no chosen edge touches; any maximal
    matching must contain an edge sharing an endpoint with it.
    """
    adj = g.adj
    edges = g.edges

    def candidates(u: int, v: int, matched: int, bound: Edge | None) -> list[Edge]:
        out = set()
        for a in (u, v):
            for w in bits(adj[a] & ~matched):
                e = (min(a, w), max(a, w))
                if bound is None or e > bound:
                    out.add(e)
        return sorted(out)

    def first_undominated(matched: int) -> Edge | None:
        for u, v in edges:
            if not (matched >> u & 1 or matched >> v & 1):
                return u, v
        return None

    # greedy maximal matching bounds the search
    greedy_matched = 0
    greedy_size = 0
    for u, v in edges:
        if not (greedy_matched >> u & 1 or greedy_matched >> v & 1):
            greedy_matched |= 1 << u | 1 << v
            greedy_size += 1

    best = greedy_size

    def descend(size: int, matched: int) -> None:
        nonlocal best
        e = first_undominated(matched)
        if e is None:
            if size < best:
                best = size
            return
        if size + 1 >= best:
            return
        u, v = e
        for a, b in candidates(u, v, matched, None):
            descend(size + 1, matched | 1 << a | 1 << b)

    descend(0, 0)
    target = best

    def feasible(matched: int, bound: Edge | None, budget: int) -> bool:
        e = first_undominated(matched)
        if e is None:
            return True
        if budget == 0:
            return False
        u, v = e
        for a, b in candidates(u, v, matched, bound):
            if feasible(matched | 1 << a | 1 << b, bound, budget - 1):
                return True
        return False

    witness: list[Edge] = []
    used = 0
    last: Edge | None = None
    for _ in range(target):
        for e in edges:
            if last is not None and e <= last:
                continue
            u, v = e
            if used & (1 << u | 1 << v):
                continue
            if feasible(used | 1 << u | 1 << v, e, target - len(witness) - 1):
                witness.append(e)
                used |= 1 << u | 1 << v
                last = e
                break
        else:
            raise AssertionError("witness reconstruction must succeed")
    return WitnessedValue(target, tuple(witness))


def enumerate_matchings(g: Graph) -> Iterator[tuple[Edge, ...]]:
    """Every matching (the empty one included), in lexicographic stream order."""
    edges = g.edges

    def rec(start: int, matched: int, acc: list[Edge]) -> Iterator[tuple[Edge, ...]]:
        yield tuple(acc)
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if matched & (1 << u | 1 << v):
                continue
            acc.append(edges[idx])
            yield from rec(idx + 1, matched | 1 << u | 1 << v, acc)
            acc.pop()

    yield from rec(0, 0, [])


def enumerate_maximal_matchings(g: Graph) -> Iterator[tuple[Edge, ...]]:
    """Every maximal matching exactly once, in lexicographic stream order."""
    adj = g.adj
    all_mask = g.vertex_mask()
    for m in enumerate_matchings(g):
        covered = matched_mask(m)
        if _first_uncovered_edge(adj, all_mask & ~covered) is None:
            yield m


def is_equimatchable(g: Graph) -> bool:
    """Every maximal matching has maximum cardinality."""
    return min_maximal_matching(g).value == maximum_matching(g).value


def is_randomly_matchable(g: Graph) -> bool:
    """Every matching extends to a perfect matching."""
    return all(matched_mask(m).bit_count() == g.n for m in enumerate_maximal_matchings(g))


# -- edge sets leaving an independent remainder ---------------------------------


def is_isolating_edge_set(g: Graph, edges: Iterable[Edge]) -> bool:
    """True iff vertices touched by no given edge form an independent set."""
    edge_set = set(g.edges)
    covered = 0
    for u, v in edges:
        e = (min(u, v), max(u, v))
        if e not in edge_set:
            raise ValueError(f"({u},{v}) is not an edge of the graph")
        covered |= 1 << e[0] | 1 << e[1]
    return g.is_independent_mask(g.vertex_mask() & ~covered)


def min_isolating_edge_set(g: Graph) -> WitnessedValue:
    """Smallest edge set whose untouched vertices are independent.

    Searched over raw edge subsets with no matching constraint, so the result
    is an oracle genuinely independent of :func:`min_maximal_matching`.
    """
    adj = g.adj
    all_mask = g.vertex_mask()
    edges = g.edges

    def candidates(u: int, v: int, bound: Edge | None) -> list[Edge]:
        out = set()
        for a in (u, v):
            for w in bits(adj[a]):
                e = (min(a, w), max(a, w))
                if bound is None or e > bound:
                    out.add(e)
        return sorted(out)

    def feasible(covered: int, bound: Edge | None, budget: int) -> bool:
        pick = _first_uncovered_edge(adj, all_mask & ~covered)
        if pick is None:
            return True
        if budget == 0:
            return False
        u, v = pick
        for a, b in candidates(u, v, bound):
            if feasible(covered | 1 << a | 1 << b, bound, budget - 1):
                return True
        return False

    k = 0
    while not feasible(0, None, k):
        k += 1
    witness: list[Edge] = []
    covered = 0
    last: Edge | None = None
    for _ in range(k):
        for e in edges:
            if last is not None and e <= last:
                continue
            u, v = e
            if feasible(covered | 1 << u | 1 << v, e, k - len(witness) - 1):
                witness.append(e)
                covered |= 1 << u | 1 << v
                last = e
                break
        else:
            raise AssertionError("witness reconstruction must succeed")
    return WitnessedValue(k, tuple(witness))


def isolating_edges_to_matching(g: Graph, edges: Iterable[Edge]) -> tuple[Edge, ...]:
    """Exchange a minimum isolating edge set into a maximal matching of equal size.

    While two chosen edges share an endpoint, the second one either swaps to
    an edge reaching an untouched vertex (growing the touched set) or, when
    its far endpoint has all neighbors touched, drops out entirely.
    """
    current = set()
    edge_set = set(g.edges)
    for u, v in edges:
        e = (min(u, v), max(u, v))
        if e not in edge_set:
            raise ValueError(f"({u},{v}) is not an edge of the graph")
        current.add(e)
    if not is_isolating_edge_set(g, current):
        raise ValueError("input edges do not leave an independent remainder")
    if len(current) != min_isolating_edge_set(g).value:
        raise ValueError("input edge set is not minimum")

    adj = g.adj
    while True:
        covered = matched_mask(current)
        # first vertex where two chosen edges collide
        shared = None
        for x in bits(covered):
            touching = [e for e in sorted(current) if x in e]
            if len(touching) > 1:
                shared = (x, touching[0], touching[1])
                break
        if shared is None:
            break
        x, keep, drop = shared
        far = drop[0] if drop[1] == x else drop[1]
        outside = adj[far] & ~covered
        if outside:
            t = (outside & -outside).bit_length() - 1
            current.remove(drop)
            current.add((min(far, t), max(far, t)))
        else:
            # the far endpoint's neighbors are all touched, so it may go uncovered
            current.remove(drop)
    result = tuple(sorted(current))
    assert is_maximal_matching(g, result)
    return result


# -- pattern containment and general isolation ----------------------------------

MAX_PATTERN_VERTICES = 5


def _check_pattern(h: Graph) -> None:
    if not 1 <= h.n <= MAX_PATTERN_VERTICES:
        raise ValueError(f"pattern must have 1..{MAX_PATTERN_VERTICES} vertices")


def _embedding_order(h: Graph) -> list[int]:
    order = [max(range(h.n), key=lambda v: (h.degree(v), -v))]
    rest = set(range(h.n)) - set(order)
    while rest:
        nxt = max(
            rest,
            key=lambda v: (sum(h.adjacent(v, u) for u in order), h.degree(v), -v),
        )
        order.append(nxt)
        rest.remove(nxt)
    return order


def _find_occurrence(g: Graph, h: Graph, alive: int) -> tuple[int, ...] | None:
    """One injective edge-preserving embedding of h into g[alive], or None."""
    if h.n > alive.bit_count():
        return None
    order = _embedding_order(h)
    required = [
        [t for t in range(pos) if h.adjacent(order[pos], order[t])]
        for pos in range(h.n)
    ]
    image = [0] * h.n

    def rec(pos: int, used: int) -> bool:
        if pos == h.n:
            return True
        for c in bits(alive & ~used):
            if all(g.adj[c] >> image[t] & 1 for t in required[pos]):
                image[pos] = c
                if rec(pos + 1, used | 1 << c):
                    return True
        return False

    if rec(0, 0):
        return tuple(sorted(image))
    return None


def contains_pattern(g: Graph, h: Graph) -> bool:
    """True iff g has a subgraph (not necessarily induced) isomorphic to h."""
    _check_pattern(h)
    return _find_occurrence(g, h, g.vertex_mask()) is not None


def isolation_number_general(g: Graph, patterns: Iterable[Graph]) -> WitnessedValue:
    """Smallest set S such that the graph outside N[S] contains no pattern.

    With the single pattern K_2 this coincides with :func:`isolation_number`;
    with K_1 the remainder must be empty, giving the domination number.
    """
    pats = tuple(patterns)
    if not pats:
        raise ValueError("pattern family must be nonempty")
    for h in pats:
        _check_pattern(h)
    all_mask = g.vertex_mask()
    closed = tuple(g.adj[v] | 1 << v for v in range(g.n))

    def surviving_occurrence(covered: int) -> tuple[int, ...] | None:
        alive = all_mask & ~covered
        for h in pats:
            occ = _find_occurrence(g, h, alive)
            if occ is not None:
                return occ
        return None

    def extend(s_mask: int, covered: int, allowed: int, budget: int) -> bool:
        occ = surviving_occurrence(covered)
        if occ is None:
            return True
        if budget == 0:
            return False
        hits = 0
        for x in occ:
            hits |= closed[x]
        for w in bits(hits & allowed & ~s_mask):
            if extend(s_mask | 1 << w, covered | closed[w], allowed, budget - 1):
                return True
        return False

    def feasible(fixed: int, allowed: int, budget: int) -> bool:
        return extend(fixed, g.closed_neighborhood_mask(fixed), allowed, budget)

    return _minimize_vertex_set(g.n, feasible)


# -- middle-graph witness canonicalization --------------------------------------


def canonicalize_isolating_set(mg: MiddleGraph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Rewrite a minimum isolating set of a middle graph to avoid originals.

    Each original member is swapped for the subdivision vertex of one of its
    source edges; the closed neighborhood of that vertex contains both of the
    endpoints' closed neighborhoods, so the uncovered remainder is unchanged.
    """
    g = mg.graph
    s = set()
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for middle graph")
        s.add(v)
    if not is_isolating(g, s):
        raise ValueError("input set is not isolating")
    if len(s) != isolation_number(g).value:
        raise ValueError("input set is not a minimum isolating set")
    size = len(s)
    src = mg.source
    while True:
        originals = sorted(v for v in s if v < mg.original_count)
        if not originals:
            break
        vi = originals[0]
        nbrs = src.neighbors(vi)
        if not nbrs:
            # a minimum set never keeps an isolated original: dropping it
            # would shrink the set while staying isolating
            raise ValueError("minimum isolating set holds an isolated original")
        vj = nbrs[0]
        mv = mg.edge_vertex_of[(min(vi, vj), max(vi, vj))]
        s.discard(vi)
        s.add(mv)
    result = tuple(sorted(s))
    assert len(result) == size and is_isolating(g, result)
    return result
