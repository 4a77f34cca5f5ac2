"""Small immutable graphs on bitset adjacency, generators, and text formats.

Vertices are labeled 0..n-1 and n is capped at 64 so every vertex set fits
in one Python int used as a bitmask. All graph values are immutable; every
operation here is a pure function.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

MAX_VERTICES = 64


class ParseError(ValueError):
    """Malformed edge-list or graph6 input."""


class CapacityError(ValueError):
    """Construction would exceed the 64-vertex cap."""


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph: no loops, no multi-edges, n <= 64."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._edges = tuple(
            (u, v) for u in range(n) for v in bits(self.adj[u]) if u < v
        )

    @classmethod
    def from_masks(cls, masks: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g.adj = masks
        g._edges = tuple(
            (u, v) for u in range(g.n) for v in bits(masks[u]) if u < v
        )
        return g

    # -- elementary queries -------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(bits(self.adj[v]))

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def min_degree(self) -> int:
        return min((m.bit_count() for m in self.adj), default=0)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | 1 << v

    # -- set-level queries --------------------------------------------------

    def closed_neighborhood(self, vertices: Iterable[int]) -> tuple[int, ...]:
        """S together with every vertex adjacent to a member of S."""
        m = 0
        for v in vertices:
            self._check_vertex(v)
            m |= self.closed_mask(v)
        return tuple(bits(m))

    def closed_neighborhood_mask(self, member_mask: int) -> int:
        m = member_mask
        for v in bits(member_mask):
            m |= self.adj[v]
        return m

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = 0
        for v in vertices:
            self._check_vertex(v)
            m |= 1 << v
        return self.is_independent_mask(m)

    def is_independent_mask(self, member_mask: int) -> bool:
        for v in bits(member_mask):
            if self.adj[v] & member_mask:
                return False
        return True

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, by smallest member."""
        return [tuple(bits(m)) for m in self.component_masks()]

    def component_masks(self, removed_mask: int = 0) -> list[int]:
        remaining = self.vertex_mask() & ~removed_mask
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                grown = comp
                for v in bits(frontier):
                    grown |= self.adj[v] & remaining
                frontier = grown & ~comp
                comp = grown
            comps.append(comp)
            remaining &= ~comp
        return comps

    def odd_components_after_removal(self, vertices: Iterable[int]) -> int:
        """Number of odd-order components left after deleting ``vertices``."""
        removed = 0
        for v in vertices:
            self._check_vertex(v)
            removed |= 1 << v
        return sum(1 for m in self.component_masks(removed) if m.bit_count() % 2)

    def distance(self, u: int, v: int) -> int | float:
        """Shortest-path distance; ``math.inf`` when u and v are disconnected."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            d += 1
            grown = 0
            for w in bits(frontier):
                grown |= self.adj[w]
            frontier = grown & ~seen
            if frontier >> v & 1:
                return d
            seen |= frontier
        return math.inf

    def diameter(self) -> int | float:
        """Largest pairwise distance; ``math.inf`` for disconnected graphs."""
        if self.n <= 1:
            return 0
        if not self.is_connected():
            return math.inf
        best = 0
        for u in range(self.n):
            # BFS levels from u
            seen = 1 << u
            frontier = seen
            d = 0
            while True:
                grown = 0
                for w in bits(frontier):
                    grown |= self.adj[w]
                frontier = grown & ~seen
                if not frontier:
                    break
                seen |= frontier
                d += 1
            best = max(best, d)
        return best

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.adj[v].bit_count() == 1)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.component_masks()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.edge_count == self.n - 1

    # -- plumbing -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)!r})"


# -- generators --------------------------------------------------------------


def path(n: int) -> Graph:
    """Path on n >= 1 vertices, 0-1-2-...-(n-1)."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph with parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(k: int) -> Graph:
    """Star with center 0 and k >= 1 leaves."""
    if k < 1:
        raise ValueError("star needs k >= 1")
    return complete_bipartite(1, k)


def spider(k: int) -> Graph:
    """Tree with center 0 and k >= 2 legs of length two; order 2k+1.

    Leg i consists of the middle vertex 2i+1 and the leaf 2i+2.
    """
    if k < 2:
        raise ValueError("spider needs k >= 2")
    edges = []
    for i in range(k):
        edges.append((0, 2 * i + 1))
        edges.append((2 * i + 1, 2 * i + 2))
    return Graph(2 * k + 1, edges)


def edgeless(n: int) -> Graph:
    """Graph on n vertices with no edges."""
    return Graph(n)


# -- text formats -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse "n" followed by one "u v" line per edge.

    Duplicate edge lines collapse; errors carry the 1-based line number.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"line {lineno}: expected vertex count, got {line!r}")
            if not 0 <= n <= MAX_VERTICES:
                raise ParseError(f"line {lineno}: vertex count {n} outside 0..{MAX_VERTICES}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint in {line!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        edges.append((min(u, v), max(u, v)))
    if n is None:
        raise ParseError("empty input: missing vertex count")
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (printable header for n <= 62, '~' form above)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    # Upper triangle packed column by column, 6 bits per printable byte.
    out = []
    acc = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        acc <<= 6 - filled
        out.append(chr(acc + 63))
    return head + "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; inverse of :func:`to_graph6`."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ParseError("graph6 order beyond supported range")
        if len(s) < 4:
            raise ParseError("truncated graph6 header")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_VERTICES:
        raise ParseError(f"graph6 order {n} exceeds cap {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"graph6 payload has {len(body)} bytes, expected {need} for n={n}"
        )
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[pos // 6]) - 63
            if byte >> (5 - pos % 6) & 1:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    """Emit DOT source with vertex labels equal to indices."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
