"""Outside machinery of a prime base: partitions, extension sets, the
outside graph, and its components.

Fix a structure sigma and a proper subset X whose induced substructure is
prime. Every outside vertex v falls into exactly one of three classes:

* Ext      -- sigma[X + v] stays prime;
* ANGLE    -- X becomes a module of sigma[X + v] (v is uniform toward X);
* ALPHA(a) -- {a, v} becomes a module of sigma[X + v] for a unique a in X.

Refining the latter two classes by the label pair toward X (toward a for
ALPHA) yields the q-blocks; blocks with a symmetric pair form q^s, the
asymmetric ones q^a. The outside graph puts an edge on every outside pair
whose joint addition to X is prime. Odd-size statements S1, S3, S5 assert
that no odd extension of the given size is prime.

All primality queries against one (sigma, X) share a cache, so building the
partition, the graph, the components and the statements costs each subset
test once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Union

from .bits import bits_tuple, iter_bits, mask_from
from .core import PairClass, TwoStructure
from .errors import (
    BaseNotPrime,
    EmptyOutside,
    EvenK,
    InconsistentSC,
    InvalidEdge,
    SizeLimitExceeded,
    UnknownBlock,
)
from .graphs import Graph
from .modular import _is_prime_extension, _is_prime_mask

#: Default cap on the size of enumerated extension subsets.
EPS_SIZE_CAP = 6
#: Default cap on the outside cardinality for exhaustive extension loops.
OUTSIDE_CAP = 20


class QKind(IntEnum):
    EXT = 0
    ANGLE = 1
    ALPHA = 2


@dataclass(frozen=True, order=True)
class QBlockKey:
    """Identity of a q-block.

    Total order: EXT < ANGLE < ALPHA, then (alpha, e, f) lexicographically;
    used wherever a deterministic side naming is needed. ANGLE and ALPHA
    keys carry the label pair (e, f) toward X resp. toward alpha; EXT
    carries sentinels.
    """

    kind: QKind
    alpha: int = -1
    e: int = -1
    f: int = -1

    @property
    def symmetric(self) -> bool:
        return self.e == self.f

    @property
    def pblock(self) -> tuple[QKind, int]:
        """P-block identity: all ANGLE keys share one p-block; ALPHA groups by alpha."""
        return (self.kind, self.alpha if self.kind == QKind.ALPHA else -1)

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind.name}
        if self.kind == QKind.ALPHA:
            doc["alpha"] = self.alpha
        if self.kind != QKind.EXT:
            doc["e"] = self.e
            doc["f"] = self.f
        return doc

    @staticmethod
    def from_json(doc: dict) -> "QBlockKey":
        kind = QKind[doc["kind"]]
        if kind == QKind.EXT:
            return QBlockKey(QKind.EXT)
        if kind == QKind.ANGLE:
            return QBlockKey(QKind.ANGLE, -1, doc["e"], doc["f"])
        return QBlockKey(QKind.ALPHA, doc["alpha"], doc["e"], doc["f"])


def ext_key() -> QBlockKey:
    return QBlockKey(QKind.EXT)


def angle_key(e: int, f: int) -> QBlockKey:
    return QBlockKey(QKind.ANGLE, -1, e, f)


def alpha_key(alpha: int, e: int, f: int) -> QBlockKey:
    return QBlockKey(QKind.ALPHA, alpha, e, f)


@dataclass(frozen=True)
class OutsidePartition:
    """The q-blocks of one (sigma, X), keyed and sorted deterministically."""

    blocks: tuple[tuple[QBlockKey, frozenset[int]], ...]

    @cached_property
    def as_dict(self) -> dict[QBlockKey, frozenset[int]]:
        return dict(self.blocks)

    @cached_property
    def key_of(self) -> dict[int, QBlockKey]:
        mapping: dict[int, QBlockKey] = {}
        for key, members in self.blocks:
            for v in members:
                mapping[v] = key
        return mapping

    @property
    def ext(self) -> frozenset[int]:
        for key, members in self.blocks:
            if key.kind == QKind.EXT:
                return members
        return frozenset()

    def angle_union(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for key, members in self.blocks:
            if key.kind == QKind.ANGLE:
                out |= members
        return out

    def alpha_union(self, alpha: int) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for key, members in self.blocks:
            if key.kind == QKind.ALPHA and key.alpha == alpha:
                out |= members
        return out

    def q_s_keys(self) -> tuple[QBlockKey, ...]:
        return tuple(
            k for k, _ in self.blocks if k.kind != QKind.EXT and k.symmetric
        )

    def q_a_keys(self) -> tuple[QBlockKey, ...]:
        return tuple(
            k for k, _ in self.blocks if k.kind != QKind.EXT and not k.symmetric
        )


@dataclass(frozen=True)
class ComponentRecord:
    """One component of the outside graph with its bipartition and edge class.

    Sides are named so that key_b < key_d in the key order. For an isolated
    vertex the sides and s_c are absent rather than defaulted.
    """

    vertices: tuple[int, ...]
    side_b: Optional[tuple[int, ...]] = None
    side_d: Optional[tuple[int, ...]] = None
    key_b: Optional[QBlockKey] = None
    key_d: Optional[QBlockKey] = None
    s_c: Optional[PairClass] = None

    @property
    def singleton(self) -> bool:
        return len(self.vertices) == 1

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "side_b": list(self.side_b) if self.side_b is not None else None,
            "side_d": list(self.side_d) if self.side_d is not None else None,
            "s_c": self.s_c.as_list() if self.s_c is not None else None,
        }


@dataclass(frozen=True)
class SkResult:
    """Statement (Sk): no size-k extension subset is prime (k odd).

    ``smaller`` reports (Sm) for every smaller odd m, letting callers audit
    the downward-propagation claim, which is only guaranteed for prime hosts.
    """

    k: int
    holds: bool
    witness: Optional[tuple[int, ...]] = None
    smaller: tuple[tuple[int, bool], ...] = ()


@dataclass(frozen=True)
class BlockStructure:
    """Internal shape of a p-block: constant, linear, or neither."""

    verdict: str  # CONSTANT | LINEAR | OTHER
    e: Optional[int] = None
    f: Optional[int] = None
    order: Optional[tuple[int, ...]] = None


class OutsideAnalysis:
    """All outside computations for one (sigma, X), sharing one prime cache.

    Pure and deterministic; the subset loops are order-independent, so the
    cache never changes results, only cost.
    """

    def __init__(
        self,
        sigma: TwoStructure,
        x: Iterable[int],
        eps_size_cap: int = EPS_SIZE_CAP,
        outside_cap: int = OUTSIDE_CAP,
    ) -> None:
        self.sigma = sigma
        self.x_mask = mask_from(x)
        if self.x_mask & ~sigma.full_mask:
            raise InvalidEdge("base set contains out-of-range vertices")
        if self.x_mask == sigma.full_mask:
            raise EmptyOutside("base set must be a proper subset of the vertices")
        if not _is_prime_mask(sigma, self.x_mask):
            raise BaseNotPrime("sigma[X] must be prime")
        self.outside_mask = sigma.full_mask & ~self.x_mask
        self.eps_size_cap = eps_size_cap
        self.outside_cap = outside_cap
        self.x_vertices = bits_tuple(self.x_mask)
        self.outside_vertices = bits_tuple(self.outside_mask)
        self._ext_cache: dict[int, bool] = {}
        self._del_cache: dict[int, bool] = {}
        self._sk_cache: dict[int, bool] = {}

    # -- cached primality queries -------------------------------------------

    def extension_prime(self, y_mask: int) -> bool:
        """Primality of sigma[X u Y] for an outside subset mask Y."""
        hit = self._ext_cache.get(y_mask)
        if hit is None:
            hit = _is_prime_extension(self.sigma, self.x_mask, y_mask)
            self._ext_cache[y_mask] = hit
        return hit

    def deletion_prime(self, removed_mask: int) -> bool:
        """Primality of sigma - W for a removed-vertex mask W."""
        hit = self._del_cache.get(removed_mask)
        if hit is None:
            hit = _is_prime_mask(self.sigma, self.sigma.full_mask & ~removed_mask)
            self._del_cache[removed_mask] = hit
        return hit

    @cached_property
    def sigma_prime(self) -> bool:
        return self.deletion_prime(0)

    @cached_property
    def outside_critical(self) -> bool:
        """sigma prime and every outside vertex critical."""
        if not self.sigma_prime:
            return False
        return all(
            not self.deletion_prime(1 << v) for v in self.outside_vertices
        )

    # -- partition ------------------------------------------------------------

    def _classify(self, v: int) -> QBlockKey:
        sigma = self.sigma
        rows = sigma.rows
        xs = self.x_vertices
        if self.extension_prime(1 << v):
            return ext_key()
        a0 = xs[0]
        rv = rows[v]
        if all(rv[a] == rv[a0] and rows[a][v] == rows[a0][v] for a in xs):
            return angle_key(rv[a0], rows[a0][v])
        for alpha in xs:
            if all(
                rows[w][alpha] == rows[w][v] and rows[alpha][w] == rv[w]
                for w in xs
                if w != alpha
            ):
                return alpha_key(alpha, rv[alpha], rows[alpha][v])
        raise AssertionError(
            f"vertex {v} escaped the outside partition; prime base invariant broken"
        )

    @cached_property
    def partition(self) -> OutsidePartition:
        groups: dict[QBlockKey, list[int]] = {}
        for v in self.outside_vertices:
            groups.setdefault(self._classify(v), []).append(v)
        blocks = tuple(
            (key, frozenset(groups[key])) for key in sorted(groups)
        )
        part = OutsidePartition(blocks)
        covered = frozenset().union(*(m for _, m in blocks)) if blocks else frozenset()
        assert covered == frozenset(self.outside_vertices)
        return part

    # -- extension subsets ------------------------------------------------------

    def _check_enumeration_caps(self, max_size: int) -> None:
        if max_size > self.eps_size_cap:
            raise SizeLimitExceeded(
                f"extension subsets capped at size {self.eps_size_cap}, asked {max_size}"
            )
        if len(self.outside_vertices) > self.outside_cap:
            raise SizeLimitExceeded(
                f"outside sets larger than {self.outside_cap} are not enumerated"
            )

    def epsilon_sets(self, max_size: int) -> list[frozenset[int]]:
        """All outside subsets Y with sigma[X u Y] prime and 1 <= |Y| <= max_size."""
        if max_size > len(self.outside_vertices):
            raise SizeLimitExceeded("max_size exceeds the outside cardinality")
        self._check_enumeration_caps(max_size)
        found: list[frozenset[int]] = []
        for size in range(1, max_size + 1):
            for combo in combinations(self.outside_vertices, size):
                if self.extension_prime(mask_from(combo)):
                    found.append(frozenset(combo))
        return found

    def _size_holds(self, m: int) -> tuple[bool, Optional[tuple[int, ...]]]:
        for combo in combinations(self.outside_vertices, m):
            if self.extension_prime(mask_from(combo)):
                return False, combo
        return True, None

    def statement(self, k: int) -> SkResult:
        """Statement (Sk) for odd k in [1, |outside| - 1]."""
        if k % 2 == 0:
            raise EvenK(f"statements are defined for odd sizes only, got {k}")
        n_out = len(self.outside_vertices)
        if n_out == 0 or not (1 <= k <= n_out - 1):
            raise ValueError(f"k={k} outside the valid range [1, {n_out - 1}]")
        self._check_enumeration_caps(k)
        holds, witness = self._size_holds(k)
        smaller = tuple((m, self._size_holds(m)[0]) for m in range(1, k, 2))
        return SkResult(k, holds, witness, smaller)

    def statements_hold_up_to(self, k: int) -> bool:
        """No odd-size prime extension for any odd m <= min(k, |outside|).

        This is the working form of the theorem hypotheses. Downward closure
        is not assumed (it only holds for prime hosts), so every odd size in
        range is checked. The outside size itself is included when odd: the
        size-|outside| subset is the whole structure, and a prime host with a
        small odd outside is exactly the boundary case that falsifies the
        component equivalences if it slips through the hypothesis.
        """
        hit = self._sk_cache.get(k)
        if hit is not None:
            return hit
        bound = min(k, len(self.outside_vertices))
        self._check_enumeration_caps(bound)
        result = True
        for m in range(1, bound + 1, 2):
            if not self._size_holds(m)[0]:
                result = False
                break
        self._sk_cache[k] = result
        return result

    # -- outside graph and components ---------------------------------------

    @cached_property
    def gamma(self) -> Graph:
        edges = [
            (v, w)
            for v, w in combinations(self.outside_vertices, 2)
            if self.extension_prime((1 << v) | (1 << w))
        ]
        return Graph.build(self.outside_vertices, edges)

    @cached_property
    def components(self) -> tuple[ComponentRecord, ...]:
        """Components in ascending least-vertex order, bipartitioned by q-block.

        A structure violating the odd-size-3 statement may produce components
        that do not split across exactly two q-blocks or whose edges disagree
        on the label pair; both raise InconsistentSC.
        """
        part = self.partition
        gamma = self.gamma
        rows = self.sigma.rows
        records: list[ComponentRecord] = []
        for comp in gamma.components():
            if len(comp) == 1:
                records.append(ComponentRecord(vertices=comp))
                continue
            keys = sorted({part.key_of[v] for v in comp})
            if len(keys) != 2:
                raise InconsistentSC(
                    f"component {comp} spans {len(keys)} q-blocks; "
                    "statement S3 violated or base degenerate"
                )
            key_b, key_d = keys
            side_b = tuple(v for v in comp if part.key_of[v] == key_b)
            side_d = tuple(v for v in comp if part.key_of[v] == key_d)
            s_c: Optional[PairClass] = None
            for u, w in gamma.edges:
                if u not in comp:
                    continue
                b, d = (u, w) if part.key_of[u] == key_b else (w, u)
                if part.key_of[b] != key_b or part.key_of[d] != key_d:
                    raise InconsistentSC(
                        f"edge ({u},{w}) does not join the two sides of {comp}"
                    )
                pc = PairClass(rows[b][d], rows[d][b])
                if s_c is None:
                    s_c = pc
                elif s_c != pc:
                    raise InconsistentSC(
                        f"component {comp} carries edge classes {s_c} and {pc}"
                    )
            records.append(
                ComponentRecord(comp, side_b, side_d, key_b, key_d, s_c)
            )
        return tuple(records)

    def component_of(self, v: int) -> ComponentRecord:
        for rec in self.components:
            if v in rec.vertices:
                return rec
        raise UnknownBlock(f"vertex {v} is not an outside vertex")


# -- public operation wrappers -------------------------------------------------


def outside_partition(sigma: TwoStructure, x: Iterable[int]) -> OutsidePartition:
    return OutsideAnalysis(sigma, x).partition


def epsilon_sets(
    sigma: TwoStructure,
    x: Iterable[int],
    max_size: int,
    eps_size_cap: int = EPS_SIZE_CAP,
    outside_cap: int = OUTSIDE_CAP,
) -> list[frozenset[int]]:
    return OutsideAnalysis(sigma, x, eps_size_cap, outside_cap).epsilon_sets(max_size)


def statement_sk(sigma: TwoStructure, x: Iterable[int], kk: int) -> SkResult:
    return OutsideAnalysis(sigma, x).statement(kk)


def outside_graph(sigma: TwoStructure, x: Iterable[int]) -> Graph:
    return OutsideAnalysis(sigma, x).gamma


def components_with_bipartition(
    sigma: TwoStructure, x: Iterable[int]
) -> tuple[ComponentRecord, ...]:
    return OutsideAnalysis(sigma, x).components


def block_structure(
    sigma: TwoStructure, x: Iterable[int], block: Union[str, int]
) -> BlockStructure:
    """Classify the induced structure on a p-block as constant or linear.

    ``block`` is "angle" for the uniform block or an integer alpha for the
    pairing block of that base vertex.
    """
    analysis = OutsideAnalysis(sigma, x)
    part = analysis.partition
    if block == "angle":
        members = part.angle_union()
    elif isinstance(block, int):
        if not (0 <= block < sigma.n) or not (analysis.x_mask >> block) & 1:
            raise UnknownBlock(f"alpha={block} is not a base vertex")
        members = part.alpha_union(block)
    else:
        raise UnknownBlock(f"unrecognized block selector {block!r}")
    return classify_block(sigma, members)


def classify_block(sigma: TwoStructure, members: Iterable[int]) -> BlockStructure:
    vs = sorted(members)
    if len(vs) <= 1:
        return BlockStructure("CONSTANT", e=None, f=None, order=tuple(vs) or None)
    rows = sigma.rows
    labels = {rows[u][v] for u in vs for v in vs if u != v}
    if len(labels) == 1:
        e = labels.pop()
        return BlockStructure("CONSTANT", e=e, f=e)
    if len(labels) != 2:
        return BlockStructure("OTHER")
    e, f = sorted(labels)
    outdeg = {u: 0 for u in vs}
    for u in vs:
        for v in vs:
            if u == v:
                continue
            if rows[u][v] == e and rows[v][u] == f:
                outdeg[u] += 1
            elif not (rows[u][v] == f and rows[v][u] == e):
                return BlockStructure("OTHER")
    # a tournament is a linear order iff its out-degrees are pairwise distinct
    if sorted(outdeg.values()) != list(range(len(vs))):
        return BlockStructure("OTHER")
    order = tuple(sorted(vs, key=lambda u: -outdeg[u]))
    return BlockStructure("LINEAR", e=e, f=f, order=order)


def report_fragment(analysis: OutsideAnalysis) -> dict:
    """JSON-ready summary of partition, outside graph, and components."""
    part = analysis.partition
    blocks = []
    for key, members in part.blocks:
        if key.kind == QKind.EXT:
            continue
        doc = key.to_json()
        doc["members"] = sorted(members)
        blocks.append(doc)
    return {
        "ext": sorted(part.ext),
        "blocks": blocks,
        "gamma_edges": [list(e) for e in sorted(analysis.gamma.edges)],
        "components": [rec.to_json() for rec in analysis.components],
    }
