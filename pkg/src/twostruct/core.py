"""Finite 2-structures: a vertex set with labels on ordered pairs.

A 2-structure on n vertices assigns to every ordered pair (v, w), v != w,
a label id in [0, k); the label classes play the role of the equivalence
classes of the pair relation. Graphs (two symmetric labels) and tournaments
(one label per arc orientation) embed as special cases.

Vertices are dense ids 0..n-1 so that vertex sets can live in machine-word
bitmasks; exhaustive subset loops dominate the runtime of everything built
on top of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .errors import (
    DiagonalLabeled,
    DimensionMismatch,
    InvalidEdge,
    LabelOutOfRange,
    NotATournament,
    SameVertex,
    SizeLimitExceeded,
)

#: Hard cap imposed by the bitmask representation.
HARD_VERTEX_CAP = 64

#: Accepted diagonal sentinels in label tables.
_DIAG_SENTINELS = (None, -1, "-")


@dataclass(frozen=True)
class PairClass:
    """The ordered label pair of an unordered vertex pair: (label(v,w), label(w,v))."""

    forward: int
    backward: int

    def reversed(self) -> "PairClass":
        return PairClass(self.backward, self.forward)

    @property
    def symmetric(self) -> bool:
        return self.forward == self.backward

    def as_list(self) -> list[int]:
        return [self.forward, self.backward]


@dataclass(frozen=True)
class TwoStructure:
    """Immutable labeled 2-structure.

    ``flat`` stores the off-diagonal label table row-major with the diagonal
    omitted, so the mapping is defined for exactly the n*(n-1) ordered pairs.
    Instances are pure values: hashable, comparable, safe to share.
    """

    n: int
    k: int
    flat: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DimensionMismatch(f"negative vertex count {self.n}")
        if self.n > HARD_VERTEX_CAP:
            raise SizeLimitExceeded(f"n={self.n} exceeds hard cap {HARD_VERTEX_CAP}")
        if self.n >= 2 and self.k < 1:
            raise LabelOutOfRange("k must be >= 1 when n >= 2")
        if self.k < 0:
            raise LabelOutOfRange("k must be >= 0")
        if len(self.flat) != self.n * max(self.n - 1, 0):
            raise DimensionMismatch(
                f"flat table has {len(self.flat)} entries, expected {self.n * (self.n - 1)}"
            )
        for lab in self.flat:
            if not (0 <= lab < self.k):
                raise LabelOutOfRange(f"label {lab} outside [0, {self.k})")

    # -- basic access ------------------------------------------------------

    def label(self, v: int, w: int) -> int:
        if v == w:
            raise SameVertex(f"no label on diagonal pair ({v},{v})")
        return self.flat[v * (self.n - 1) + (w if w < v else w - 1)]

    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- cached views used by the closure kernel ----------------------------

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """rows[v][w] = label(v, w), diagonal entries -1."""
        out = []
        for v in range(self.n):
            base = v * (self.n - 1)
            row = [-1] * self.n
            for w in range(self.n):
                if w != v:
                    row[w] = self.flat[base + (w if w < v else w - 1)]
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def out_masks(self) -> tuple[tuple[int, ...], ...]:
        """out_masks[v][l] = bitmask of w with label(v, w) = l."""
        masks = [[0] * self.k for _ in range(self.n)]
        rows = self.rows
        for v in range(self.n):
            rv = rows[v]
            mv = masks[v]
            for w in range(self.n):
                if w != v:
                    mv[rv[w]] |= 1 << w
        return tuple(tuple(m) for m in masks)

    @cached_property
    def in_masks(self) -> tuple[tuple[int, ...], ...]:
        """in_masks[v][l] = bitmask of w with label(w, v) = l."""
        masks = [[0] * self.k for _ in range(self.n)]
        rows = self.rows
        for w in range(self.n):
            rw = rows[w]
            for v in range(self.n):
                if w != v:
                    masks[v][rw[v]] |= 1 << w
        return tuple(tuple(m) for m in masks)


def from_matrix(n: int, k: int, rows: Sequence[Sequence[object]]) -> TwoStructure:
    """Build a 2-structure from an n x n label table with diagonal sentinels."""
    if len(rows) != n:
        raise DimensionMismatch(f"expected {n} rows, got {len(rows)}")
    flat: list[int] = []
    for v, row in enumerate(rows):
        if len(row) != n:
            raise DimensionMismatch(f"row {v} has {len(row)} entries, expected {n}")
        for w, entry in enumerate(row):
            if v == w:
                if entry not in _DIAG_SENTINELS:
                    raise DiagonalLabeled(f"diagonal cell ({v},{v}) carries {entry!r}")
                continue
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise LabelOutOfRange(f"cell ({v},{w}) is not a label id: {entry!r}")
            if not (0 <= entry < k):
                raise LabelOutOfRange(f"label {entry} at ({v},{w}) outside [0, {k})")
            flat.append(entry)
    return TwoStructure(n, k, tuple(flat))


def from_graph(
    n: int, edges: Iterable[tuple[int, int]], as_tournament: bool = False
) -> TwoStructure:
    """Identify a graph (or tournament) with its 2-structure.

    Graph mode: label 1 on both orientations of each edge, 0 elsewhere.
    Tournament mode: ``edges`` are arcs; label(v,w)=1 iff (v,w) is an arc,
    and every unordered pair must carry exactly one arc.
    """
    pairs = [tuple(e) for e in edges]
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u},{v}) outside range [0,{n})")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
    table = [[0] * n for _ in range(n)]
    if as_tournament:
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            if (u, v) in seen or (v, u) in seen:
                raise NotATournament(f"duplicated arc on pair {{{u},{v}}}")
            seen.add((u, v))
            table[u][v] = 1
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in seen and (v, u) not in seen:
                    raise NotATournament(f"missing arc on pair {{{u},{v}}}")
    else:
        for u, v in pairs:
            table[u][v] = 1
            table[v][u] = 1
    for v in range(n):
        table[v][v] = None  # type: ignore[call-overload]
    return from_matrix(n, 2, table)


def pair_class(sigma: TwoStructure, v: int, w: int) -> PairClass:
    """[v,w] = (label(v,w), label(w,v))."""
    if v == w:
        raise SameVertex(f"pair class undefined for ({v},{v})")
    return PairClass(sigma.label(v, w), sigma.label(w, v))


def induced(
    sigma: TwoStructure, verts: Iterable[int]
) -> tuple[TwoStructure, tuple[int, ...]]:
    """Induced substructure on ``verts``.

    Vertices are relabeled to 0..m-1 preserving the order of original ids;
    the translation table maps each new id to its original id.
    """
    vs = sorted(set(verts))
    for v in vs:
        if not (0 <= v < sigma.n):
            raise InvalidEdge(f"vertex {v} outside range [0,{sigma.n})")
    m = len(vs)
    rows = sigma.rows
    flat: list[int] = []
    for i in range(m):
        ri = rows[vs[i]]
        for j in range(m):
            if i != j:
                flat.append(ri[vs[j]])
    return TwoStructure(m, sigma.k, tuple(flat)), tuple(vs)


def remove(sigma: TwoStructure, verts: Iterable[int]) -> tuple[TwoStructure, tuple[int, ...]]:
    """Induced substructure on the complement of ``verts`` (sigma - W)."""
    drop = set(verts)
    return induced(sigma, (v for v in range(sigma.n) if v not in drop))


# -- isomorphism -----------------------------------------------------------


def _invariant(sigma: TwoStructure, v: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    out = [0] * sigma.k
    inn = [0] * sigma.k
    for l in range(sigma.k):
        out[l] = sigma.out_masks[v][l].bit_count()
        inn[l] = sigma.in_masks[v][l].bit_count()
    return tuple(out), tuple(inn)


def _search_mapping(a: TwoStructure, b: TwoStructure) -> Optional[tuple[int, ...]]:
    n = a.n
    inv_a = [_invariant(a, v) for v in range(n)]
    inv_b = [_invariant(b, v) for v in range(n)]
    if sorted(inv_a) != sorted(inv_b):
        return None
    ra, rb = a.rows, b.rows
    mapping = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or inv_a[v] != inv_b[w]:
                continue
            ok = True
            for u in range(v):
                mu = mapping[u]
                if ra[v][u] != rb[w][mu] or ra[u][v] != rb[mu][w]:
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return tuple(mapping) if extend(0) else None


def are_isomorphic(
    a: TwoStructure,
    b: TwoStructure,
    up_to_labels: bool = False,
    max_n: int = 10,
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Search for a label-preserving vertex bijection a -> b.

    Label ids are fixed by default (the label classes are not interchangeable);
    ``up_to_labels=True`` additionally tries every label bijection, which the
    synthesizer uses for comparisons modulo label renaming. Returns
    (found, mapping) with mapping[v] = image of v.
    """
    if a.n > max_n or b.n > max_n:
        raise SizeLimitExceeded(f"isomorphism search capped at n={max_n}")
    if a.n != b.n:
        return False, None
    if a.n == 0:
        return True, ()
    if not up_to_labels:
        if a.k != b.k:
            return False, None
        m = _search_mapping(a, b)
        return (m is not None), m
    used_a = sorted(set(a.flat))
    used_b = sorted(set(b.flat))
    if len(used_a) != len(used_b):
        return False, None
    for perm in permutations(used_b):
        relab = dict(zip(used_a, perm))
        recoded = TwoStructure(a.n, b.k, tuple(relab[l] for l in a.flat))
        m = _search_mapping(recoded, b)
        if m is not None:
            return True, m
    return False, None
