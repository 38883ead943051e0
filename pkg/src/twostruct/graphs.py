"""Plain undirected graphs over arbitrary integer vertex ids.

The outside graph of an analysis keeps the original vertex ids of the host
structure, so this type does not assume dense ids. Sizes stay tiny (the
hard cap of the host applies), so adjacency is kept as plain sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import TwoStructure, from_graph
from .errors import InvalidEdge


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise InvalidEdge(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph; ``vertices`` is sorted, edges are (u, v) with u < v."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @staticmethod
    def build(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        es = set()
        for u, v in edges:
            e = _norm_edge(u, v)
            if e[0] not in vset or e[1] not in vset:
                raise InvalidEdge(f"edge {e} not within vertex set")
            es.add(e)
        return Graph(vs, frozenset(es))

    @property
    def order(self) -> int:
        return len(self.vertices)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def induced(self, verts: Iterable[int]) -> "Graph":
        keep = set(verts)
        return Graph(
            tuple(sorted(keep & set(self.vertices))),
            frozenset(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def remove(self, verts: Iterable[int]) -> "Graph":
        drop = set(verts)
        return self.induced(v for v in self.vertices if v not in drop)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, each sorted, listed by ascending least vertex."""
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        adj = self.adjacency
        for start in self.vertices:
            if start in seen:
                continue
            stack = [start]
            comp = {start}
            seen.add(start)
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.order <= 1 or len(self.components()) == 1

    def two_coloring(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """A proper 2-coloring, or None if some component has an odd cycle.

        Per component, the side containing the least vertex goes to side 0;
        this fixes the coloring of disconnected graphs deterministically.
        """
        color: dict[int, int] = {}
        adj = self.adjacency
        for comp in self.components():
            root = comp[0]
            color[root] = 0
            queue = [root]
            while queue:
                u = queue.pop()
                for w in adj[u]:
                    if w not in color:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        side0 = frozenset(v for v in self.vertices if color[v] == 0)
        side1 = frozenset(v for v in self.vertices if color[v] == 1)
        return side0, side1

    def to_two_structure(self) -> tuple[TwoStructure, tuple[int, ...]]:
        """Dense relabeling as a symmetric 2-structure; returns the id table."""
        vmap = self.vertices
        pos = {v: i for i, v in enumerate(vmap)}
        dense = [(pos[u], pos[v]) for u, v in self.edges]
        return from_graph(len(vmap), dense), vmap


def graph_of_structure(sigma: TwoStructure) -> Graph:
    """Read a symmetric 2-label structure back as a graph (label 1 = edge)."""
    edges = [
        (v, w)
        for v in range(sigma.n)
        for w in range(v + 1, sigma.n)
        if sigma.label(v, w) == 1 and sigma.label(w, v) == 1
    ]
    return Graph.build(range(sigma.n), edges)
