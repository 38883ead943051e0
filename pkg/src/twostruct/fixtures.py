"""Reference instances used across the test suite and the docs.

The eight-vertex instance is a finite cut of a classical construction: a
four-path base, two vertices uniform toward it, and two vertices pairing
with the path end, with a half-graph pattern between the two groups.
The path fixture extends the base by a dangling path instead, which makes
odd one-vertex extensions prime and so breaks the odd-size statements.
"""

from __future__ import annotations

from .core import TwoStructure, from_graph

#: Base vertices of both fixtures (a four-path 0-1-2-3).
FIXTURE_X = frozenset({0, 1, 2, 3})

#: Edges of the eight-vertex instance; 4,5 are the uniform pair (y0, y1),
#: 6,7 the pairing pair (z0, z1).
G8_EDGES = (
    (0, 1),
    (1, 2),
    (2, 3),
    (1, 6),
    (1, 7),
    (4, 6),
    (4, 7),
    (5, 7),
)


def g8() -> TwoStructure:
    """Outside-critical 8-vertex instance over the four-path base."""
    return from_graph(8, G8_EDGES)


def g8_without_last_gamma_edge() -> TwoStructure:
    """The same instance with the (5, 7) edge removed; no longer prime."""
    return from_graph(8, tuple(e for e in G8_EDGES if e != (5, 7)))


def path_extension(tail: int = 3) -> TwoStructure:
    """A (4 + tail)-path with the four-path base: every prefix of the tail
    is a prime extension, so statement S1 (and S3 for tail >= 3) fails."""
    n = 4 + tail
    return from_graph(n, [(i, i + 1) for i in range(n - 1)])


def p4() -> TwoStructure:
    return from_graph(4, [(0, 1), (1, 2), (2, 3)])


def c4() -> TwoStructure:
    return from_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def p5() -> TwoStructure:
    return from_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


def cycle_tournament_3() -> TwoStructure:
    return from_graph(3, [(0, 1), (1, 2), (2, 0)], as_tournament=True)
