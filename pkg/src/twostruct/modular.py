"""Modules, primality, criticality, and the primality graph.

A module is a vertex subset whose members are indistinguishable from the
outside: every external vertex carries one label toward the whole set and
one label back from it. A structure is prime when it has at least three
vertices and only the trivial modules (empty, singletons, everything).

The primality test runs minimal-module closures from every vertex pair
(O(n^2) closures of O(n^3) bit-parallel work each) rather than enumerating
subsets; the exponential enumeration survives only as a capped oracle that
the test suite plays against the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .bits import bits_tuple, iter_bits, lowest_bit, mask_from
from .core import TwoStructure
from .errors import NotPrime, SizeLimitExceeded
from .graphs import Graph

#: Default cap for the exponential module-enumeration oracle.
ORACLE_CAP = 16


# -- closure kernel ---------------------------------------------------------


def _closure_mask(sigma: TwoStructure, seed: int, universe: int) -> int:
    """Smallest module of sigma[universe] containing ``seed``.

    Grows the seed by absorbing every splitter (a universe vertex that sees
    two current members differently); any module containing the seed must
    contain every splitter, so the fixed point is the minimal module.
    """
    out = sigma.out_masks
    inn = sigma.in_masks
    rows = sigma.rows
    s = seed
    changed = True
    while changed and s != universe:
        changed = False
        rest = universe & ~s
        while rest:
            b = rest & -rest
            rest ^= b
            v = b.bit_length() - 1
            x0 = lowest_bit(s)
            rv = rows[v]
            if (s & ~out[v][rv[x0]]) or (s & ~inn[v][rows[x0][v]]):
                s |= b
                changed = True
    return s


def _is_module_mask(sigma: TwoStructure, m: int, universe: int) -> bool:
    """Module test for a mask, restricted to sigma[universe]."""
    if m == 0 or m & (m - 1) == 0:
        return True
    out = sigma.out_masks
    inn = sigma.in_masks
    rows = sigma.rows
    x0 = lowest_bit(m)
    rest = universe & ~m
    while rest:
        b = rest & -rest
        rest ^= b
        v = b.bit_length() - 1
        if (m & ~out[v][rows[v][x0]]) or (m & ~inn[v][rows[x0][v]]):
            return False
    return True


def _is_prime_mask(sigma: TwoStructure, universe: int) -> bool:
    """Primality of sigma[universe]; no witness, free pair order."""
    nv = universe.bit_count()
    if nv < 3:
        return False
    verts = bits_tuple(universe)
    for i, u in enumerate(verts):
        bu = 1 << u
        for v in verts[i + 1 :]:
            if _closure_mask(sigma, bu | (1 << v), universe) != universe:
                return False
    return True


def _is_prime_extension(sigma: TwoStructure, x_mask: int, y_mask: int) -> bool:
    """Primality of sigma[X u Y] when sigma[X] is already known prime.

    Any nontrivial module M of the extension meets X in a module of the prime
    base, hence in the empty set, a singleton, or all of X. So it suffices to
    run closures from pairs inside Y, pairs across X x Y, and one pair inside
    X (whose closure always absorbs X and stops there iff X itself became a
    module). Pair order favors quick discovery of the small modules that odd
    extensions of valid instances always carry.
    """
    universe = x_mask | y_mask
    if universe.bit_count() < 3:
        return False
    ys = bits_tuple(y_mask)
    for i, u in enumerate(ys):
        bu = 1 << u
        for v in ys[i + 1 :]:
            if _closure_mask(sigma, bu | (1 << v), universe) != universe:
                return False
    xs = bits_tuple(x_mask)
    for u in ys:
        bu = 1 << u
        for a in xs:
            if _closure_mask(sigma, bu | (1 << a), universe) != universe:
                return False
    if len(xs) >= 2:
        if _closure_mask(sigma, (1 << xs[0]) | (1 << xs[1]), universe) != universe:
            return False
    return True


# -- public module operations ------------------------------------------------


def is_module(
    sigma: TwoStructure, m: Iterable[int]
) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Decide whether ``m`` is a module; on failure return the least violating
    triple (x, y, v) with x, y inside and v outside."""
    ms = sorted(set(m))
    rows = sigma.rows
    for i, x in enumerate(ms):
        for y in ms[i + 1 :]:
            for v in range(sigma.n):
                if v in ms or v == x or v == y:
                    continue
                if rows[x][v] != rows[y][v] or rows[v][x] != rows[v][y]:
                    return False, (x, y, v)
    return True, None


def minimal_module_containing(sigma: TwoStructure, seed: Iterable[int]) -> frozenset[int]:
    """Smallest module containing a nonempty seed.

    Well-defined because modules containing a fixed nonempty set are closed
    under intersection; the closure computes the intersection directly.
    """
    seed_mask = mask_from(seed)
    if seed_mask == 0:
        raise ValueError("seed must be nonempty")
    return frozenset(iter_bits(_closure_mask(sigma, seed_mask, sigma.full_mask)))


@dataclass(frozen=True)
class PrimeResult:
    """Outcome of a primality test with a deterministic witness."""

    prime: bool
    reason: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.prime


def is_prime(sigma: TwoStructure) -> PrimeResult:
    """Primality with witness: the nontrivial module found from the
    lexicographically least pair whose closure stays proper."""
    if sigma.n < 3:
        return PrimeResult(False, reason="SizeTooSmall")
    universe = sigma.full_mask
    for u in range(sigma.n):
        bu = 1 << u
        for v in range(u + 1, sigma.n):
            c = _closure_mask(sigma, bu | (1 << v), universe)
            if c != universe:
                return PrimeResult(False, reason="NontrivialModule", witness=bits_tuple(c))
    return PrimeResult(True)


def enumerate_modules(sigma: TwoStructure, cap: int = ORACLE_CAP) -> list[frozenset[int]]:
    """Exponential oracle: every module, trivial ones included.

    Ordered by (size, vertex tuple). Only for n <= cap.
    """
    if sigma.n > cap:
        raise SizeLimitExceeded(f"module enumeration capped at n={cap}")
    universe = sigma.full_mask
    found = []
    for m in range(1 << sigma.n):
        if _is_module_mask(sigma, m, universe):
            found.append(frozenset(iter_bits(m)))
    found.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return found


def _require_prime(sigma: TwoStructure) -> None:
    if not _is_prime_mask(sigma, sigma.full_mask):
        raise NotPrime("operation requires a prime structure")


def critical_vertices(sigma: TwoStructure) -> frozenset[int]:
    """Vertices whose removal destroys primality. Requires sigma prime."""
    _require_prime(sigma)
    universe = sigma.full_mask
    return frozenset(
        v for v in range(sigma.n) if not _is_prime_mask(sigma, universe & ~(1 << v))
    )


def is_w_critical(sigma: TwoStructure, w: Iterable[int]) -> bool:
    """True iff every vertex of w is critical. Requires sigma prime."""
    _require_prime(sigma)
    universe = sigma.full_mask
    return all(
        not _is_prime_mask(sigma, universe & ~(1 << v)) for v in set(w)
    )


def is_critical(sigma: TwoStructure) -> bool:
    """A prime structure is critical when all of its vertices are."""
    return is_w_critical(sigma, range(sigma.n))


def primality_graph(sigma: TwoStructure) -> Graph:
    """Graph on V(sigma) whose edges are the pairs whose joint removal
    preserves primality. Requires sigma prime."""
    _require_prime(sigma)
    universe = sigma.full_mask
    edges = [
        (v, w)
        for v, w in combinations(range(sigma.n), 2)
        if _is_prime_mask(sigma, universe & ~(1 << v) & ~(1 << w))
    ]
    return Graph.build(range(sigma.n), edges)


# -- graph-level conveniences -------------------------------------------------


def graph_is_prime(g: Graph) -> bool:
    st, _ = g.to_two_structure()
    return _is_prime_mask(st, st.full_mask)


def graph_is_critical(g: Graph) -> bool:
    """Prime and every single-vertex deletion breaks primality."""
    st, _ = g.to_two_structure()
    universe = st.full_mask
    if not _is_prime_mask(st, universe):
        return False
    return all(
        not _is_prime_mask(st, universe & ~(1 << v)) for v in range(st.n)
    )
