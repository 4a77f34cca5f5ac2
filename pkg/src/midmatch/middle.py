"""Middle-graph construction with provenance.

The middle graph of G subdivides every edge once and joins two subdivision
vertices whenever their source edges share an endpoint. Original vertices
keep their indices; the vertex for edge {i, j} (i < j) is appended after
them, in lexicographic edge order, so witness sets are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import CapacityError, Graph, MAX_VERTICES


@dataclass(frozen=True)
class Original:
    index: int


@dataclass(frozen=True)
class EdgeVertex:
    i: int
    j: int


@dataclass(frozen=True)
class MiddleGraph:
    """A middle graph plus the bookkeeping linking it back to its source."""

    graph: Graph
    source: Graph
    original_count: int
    edge_vertex_of: dict[tuple[int, int], int]

    def edge_of(self, v: int) -> tuple[int, int]:
        """Source edge of an edge-vertex ``v``."""
        i, j = self._edge_list[v - self.original_count]
        return i, j

    @property
    def _edge_list(self) -> tuple[tuple[int, int], ...]:
        return self.source.edges

    def classify_vertex(self, v: int) -> Original | EdgeVertex:
        if not 0 <= v < self.graph.n:
            raise ValueError(f"vertex {v} out of range for middle graph")
        if v < self.original_count:
            return Original(v)
        return EdgeVertex(*self.edge_of(v))

    def edge_vertex_set(self, edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
        """Vertices standing for the given source edges, sorted."""
        out = []
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key not in self.edge_vertex_of:
                raise ValueError(f"({u},{v}) is not an edge of the source graph")
            out.append(self.edge_vertex_of[key])
        return tuple(sorted(out))

    def restrict_to_original(self, vertices: Iterable[int]) -> tuple[int, ...]:
        out = set()
        for v in vertices:
            if not 0 <= v < self.graph.n:
                raise ValueError(f"vertex {v} out of range for middle graph")
            if v < self.original_count:
                out.add(v)
        return tuple(sorted(out))

    def original_mask(self) -> int:
        return (1 << self.original_count) - 1

    def edge_vertex_mask(self) -> int:
        return self.graph.vertex_mask() & ~self.original_mask()


def middle_graph(g: Graph) -> MiddleGraph:
    """Build Mid(g); raises :class:`CapacityError` when n + m exceeds 64."""
    n = g.n
    src_edges = g.edges
    m = len(src_edges)
    if n + m > MAX_VERTICES:
        raise CapacityError(
            f"middle graph needs {n + m} vertices, cap is {MAX_VERTICES}"
        )
    edge_vertex_of = {e: n + t for t, e in enumerate(src_edges)}
    out_edges = []
    for t, (i, j) in enumerate(src_edges):
        mv = n + t
        out_edges.append((i, mv))
        out_edges.append((j, mv))
        for s in range(t + 1, m):
            k, l = src_edges[s]
            if k == i or k == j or l == i or l == j:
                out_edges.append((mv, n + s))
    return MiddleGraph(
        graph=Graph(n + m, out_edges),
        source=g,
        original_count=n,
        edge_vertex_of=edge_vertex_of,
    )


def to_dot(mg: MiddleGraph, name: str = "Mid") -> str:
    """DOT source: originals drawn as circles, edge-vertices as squares."""
    lines = [f"graph {name} {{"]
    for v in range(mg.original_count):
        lines.append(f'  {v} [shape=circle, label="{v}"];')
    for v in range(mg.original_count, mg.graph.n):
        i, j = mg.edge_of(v)
        lines.append(f'  {v} [shape=square, label="m({i},{j})"];')
    for u, v in mg.graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
