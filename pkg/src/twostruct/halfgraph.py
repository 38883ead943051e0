"""Half graphs: construction, recognition, and the P5-freeness test.

A half graph is a bipartite graph whose one side carries a linear order L
and a bijection phi onto the other side such that the edges are exactly
{x, phi(x')} for x <= x' in L. Equivalently (and this is what the
recognizer checks) the neighborhoods of one side form a strict chain under
inclusion with sizes m, m-1, ..., 1.

Finite linear orders are trivially discrete (every non-extreme element has
a predecessor and a successor), so no separate discreteness check exists
here: at finite scale the discrete characterization and the finite one
coincide, and the recognizer implements both.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .errors import SizeLimitExceeded
from .graphs import Graph

#: Cap for the exhaustive induced-P5 scan.
P5_SCAN_CAP = 40


def build_h2n(n: int) -> Graph:
    """The canonical half graph on 2n vertices.

    Even vertices form the ordered side, odd vertices the image side:
    edges {2p, 2q+1} for p <= q <= n-1.
    """
    if n < 1:
        raise ValueError("half graphs need at least one vertex pair")
    edges = [(2 * p, 2 * q + 1) for p in range(n) for q in range(p, n)]
    return Graph.build(range(2 * n), edges)


@dataclass(frozen=True)
class HalfGraphCertificate:
    """Witness of half-graph structure.

    ``side_x`` lists the ordered side ascending in the (unique) linear order,
    i.e. by strictly shrinking neighborhood; ``phi`` maps it onto the other
    side. Rebuilding the edge set from the certificate reproduces the input
    exactly.
    """

    side_x: tuple[int, ...]
    phi: dict[int, int]

    def rebuild_edges(self) -> frozenset[tuple[int, int]]:
        edges = set()
        for i, x in enumerate(self.side_x):
            for xp in self.side_x[i:]:
                a, b = x, self.phi[xp]
                edges.add((a, b) if a < b else (b, a))
        return frozenset(edges)


@dataclass(frozen=True)
class Rejection:
    """Why a graph is not a half graph."""

    reason: str  # OddOrder | NotBipartite | NeighborhoodsNotChain | SizeMismatch

    def __bool__(self) -> bool:
        return False


def _try_side(g: Graph, side_x: frozenset[int], side_y: frozenset[int]):
    if len(side_x) != len(side_y):
        return Rejection("SizeMismatch")
    m = len(side_x)
    ordered = sorted(side_x, key=lambda v: (-len(g.neighbors(v)), v))
    # strict chain with sizes m, m-1, ..., 1
    for rank, v in enumerate(ordered):
        if len(g.neighbors(v)) != m - rank:
            return Rejection("NeighborhoodsNotChain")
    for u, v in zip(ordered, ordered[1:]):
        if not g.neighbors(v) < g.neighbors(u):
            return Rejection("NeighborhoodsNotChain")
    phi: dict[int, int] = {}
    for i, u in enumerate(ordered):
        if i + 1 < m:
            rest = g.neighbors(u) - g.neighbors(ordered[i + 1])
        else:
            rest = g.neighbors(u)
        if len(rest) != 1:
            return Rejection("NeighborhoodsNotChain")
        phi[u] = next(iter(rest))
    cert = HalfGraphCertificate(tuple(ordered), phi)
    if cert.rebuild_edges() != g.edges:
        return Rejection("NeighborhoodsNotChain")
    return cert


def recognize_half_graph(g: Graph) -> Union[HalfGraphCertificate, Rejection]:
    """Accept iff the graph is a half graph; rejection carries a reason.

    The ordered side is forced: x precedes x' exactly when N(x) strictly
    contains N(x'). Of the two side assignments of the bipartition the one
    whose side contains the least vertex is tried first, so accepted
    certificates are deterministic. Disconnected inputs can never pass the
    chain and rebuild checks (a half graph joins every x to phi(x)).
    """
    if g.order == 0 or g.order % 2 == 1:
        return Rejection("OddOrder" if g.order % 2 == 1 else "SizeMismatch")
    coloring = g.two_coloring()
    if coloring is None:
        return Rejection("NotBipartite")
    side0, side1 = coloring
    first = _try_side(g, side0, side1)
    if isinstance(first, HalfGraphCertificate):
        return first
    second = _try_side(g, side1, side0)
    if isinstance(second, HalfGraphCertificate):
        return second
    return first


def is_p5_free(
    g: Graph, cap: int = P5_SCAN_CAP
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Exhaustive induced-P5 scan; returns (free, least witness 5-set)."""
    if g.order > cap:
        raise SizeLimitExceeded(f"induced-P5 scan capped at {cap} vertices")
    for combo in combinations(g.vertices, 5):
        sub = g.induced(combo)
        if len(sub.edges) != 4:
            continue
        degs = sorted(len(sub.neighbors(v)) for v in combo)
        if degs == [1, 1, 2, 2, 2] and sub.is_connected():
            return False, combo
    return True, None


def has_k2_plus_k2(g: Graph) -> bool:
    """Induced disjoint union of two edges (the 2K2 pattern)."""
    edges = sorted(g.edges)
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if len({a, b, c, d}) != 4:
                continue
            if (
                not g.has_edge(a, c)
                and not g.has_edge(a, d)
                and not g.has_edge(b, c)
                and not g.has_edge(b, d)
            ):
                return True
    return False
