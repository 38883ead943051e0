"""Generators: random structures, random prime structures, and constructive
synthesis of outside-critical instances.

A synthesis spec picks a prime base, a label budget, and a list of
components, each an edge (m=1) or a half graph on 2m vertices (m>=2) hung
between two q-block keys with a declared edge class. Components are
restricted to these two shapes because they are exactly the components an
outside-critical instance can have at finite scale, so the generator loses
no generality.

Building goes through the same reconstruction routine that inverts
describe: the spec is assembled into a description bundle, reconstructed,
and the result is verified after the fact (partition, outside graph,
odd-size statements, criticality). Which (base, spec) combinations are
realizable is resolved empirically by that verification: a failing
combination reports its first mismatch rather than being silently patched.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import PairClass, TwoStructure, induced
from .errors import GiveUp, PostVerificationFailed, SpecInvalid
from .modular import _is_prime_mask
from .outside import ComponentRecord, OutsideAnalysis, QBlockKey, QKind
from .theorems import DescriptionBundle, nonedge_pair, reconstruct

#: Default retry budget for prime rejection sampling.
PRIME_TRIES = 2000


def random_two_structure(n: int, k: int, seed: int) -> TwoStructure:
    """Uniform labels over [0, k), one draw per ordered pair in row-major
    order, from a Mersenne Twister seeded with ``seed``. Same seed, same
    structure."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    rng = random.Random(seed)
    flat = tuple(rng.randrange(k) for _ in range(n * (n - 1)))
    return TwoStructure(n, k, flat)


def random_prime(
    n: int, k: int, seed: int, max_tries: int = PRIME_TRIES
) -> TwoStructure:
    """Rejection-sample a prime structure; GiveUp after max_tries draws."""
    if n < 3:
        raise ValueError("prime structures need n >= 3")
    rng = random.Random(seed)
    count = n * (n - 1)
    for _ in range(max_tries):
        st = TwoStructure(n, k, tuple(rng.randrange(k) for _ in range(count)))
        if _is_prime_mask(st, st.full_mask):
            return st
    raise GiveUp(f"no prime structure with n={n}, k={k} after {max_tries} tries")


@dataclass(frozen=True)
class ComponentSpec:
    """One component: an edge when m=1, the half graph on 2m vertices when
    m>=2. ``s_c`` is the edge class oriented from the b-side to the d-side."""

    m: int
    b_key: QBlockKey
    d_key: QBlockKey
    s_c: PairClass

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "b": self.b_key.to_json(),
            "d": self.d_key.to_json(),
            "s_c": self.s_c.as_list(),
        }

    @staticmethod
    def from_json(doc: dict) -> "ComponentSpec":
        return ComponentSpec(
            m=doc["m"],
            b_key=QBlockKey.from_json(doc["b"]),
            d_key=QBlockKey.from_json(doc["d"]),
            s_c=PairClass(*doc["s_c"]),
        )


@dataclass(frozen=True)
class SynthSpec:
    base: TwoStructure
    k: int
    components: tuple[ComponentSpec, ...]

    def to_json(self, base_ref: str) -> dict:
        return {
            "base": base_ref,
            "k": self.k,
            "components": [c.to_json() for c in self.components],
        }

    @staticmethod
    def from_json(doc: dict, base: TwoStructure) -> "SynthSpec":
        return SynthSpec(
            base=base,
            k=doc["k"],
            components=tuple(ComponentSpec.from_json(c) for c in doc["components"]),
        )


def validate_spec(spec: SynthSpec) -> None:
    """Structural invariants; violations raise SpecInvalid."""
    base = spec.base
    if not _is_prime_mask(base, base.full_mask):
        raise SpecInvalid("base is not prime")
    if spec.k < base.k:
        raise SpecInvalid(f"k={spec.k} smaller than the base label count {base.k}")
    if not spec.components:
        raise SpecInvalid("at least one component is required")
    pblock_pairs: dict[tuple, frozenset[int]] = {}
    qa_used: set[QBlockKey] = set()
    for i, comp in enumerate(spec.components):
        if comp.m < 1:
            raise SpecInvalid(f"component {i}: m must be >= 1")
        for key in (comp.b_key, comp.d_key):
            if key.kind == QKind.EXT:
                raise SpecInvalid(f"component {i}: EXT is not a valid block key")
            if not (0 <= key.e < spec.k and 0 <= key.f < spec.k):
                raise SpecInvalid(f"component {i}: key labels outside [0, {spec.k})")
            if key.kind == QKind.ALPHA and not (0 <= key.alpha < base.n):
                raise SpecInvalid(f"component {i}: alpha outside the base")
            pair = frozenset((key.e, key.f))
            seen = pblock_pairs.get(key.pblock)
            if seen is not None and seen != pair:
                raise SpecInvalid(
                    f"component {i}: p-block {key.pblock} already carries the label pair"
                    f" {sorted(seen)}"
                )
            pblock_pairs[key.pblock] = pair
            if not key.symmetric:
                if key in qa_used:
                    raise SpecInvalid(
                        f"component {i}: asymmetric key {key} used by two components"
                    )
                qa_used.add(key)
        if comp.b_key.pblock == comp.d_key.pblock:
            raise SpecInvalid(f"component {i}: sides must sit in different p-blocks")
        if not (0 <= comp.s_c.forward < spec.k and 0 <= comp.s_c.backward < spec.k):
            raise SpecInvalid(f"component {i}: s_c labels outside [0, {spec.k})")
        forced = nonedge_pair(comp.b_key, comp.d_key, base.label)
        if comp.s_c == forced:
            raise SpecInvalid(
                f"component {i}: s_c {comp.s_c.as_list()} equals the forced non-edge"
                " class between its blocks, so its edges would not extend primality"
            )


@dataclass(frozen=True)
class BuildResult:
    sigma: TwoStructure
    x: frozenset[int]
    bundle: DescriptionBundle
    analysis: OutsideAnalysis


def build_partially_critical(spec: SynthSpec) -> BuildResult:
    """Assemble the bundle a spec describes, reconstruct it, and verify.

    The returned structure has the base on vertices 0..v(base)-1 and the
    components laid out in order, b-side before d-side. Verification
    failures name their first mismatch.
    """
    validate_spec(spec)
    base = spec.base
    nx = base.n
    next_id = nx
    q_members: dict[QBlockKey, set[int]] = {}
    gamma_edges: set[tuple[int, int]] = set()
    records: list[ComponentRecord] = []
    for comp in spec.components:
        b_ids = tuple(range(next_id, next_id + comp.m))
        d_ids = tuple(range(next_id + comp.m, next_id + 2 * comp.m))
        next_id += 2 * comp.m
        q_members.setdefault(comp.b_key, set()).update(b_ids)
        q_members.setdefault(comp.d_key, set()).update(d_ids)
        for p in range(comp.m):
            for q in range(p, comp.m):
                gamma_edges.add((b_ids[p], d_ids[q]))
        if comp.b_key < comp.d_key:
            side_b, side_d = b_ids, d_ids
            key_b, key_d = comp.b_key, comp.d_key
            s_c = comp.s_c
        else:
            side_b, side_d = d_ids, b_ids
            key_b, key_d = comp.d_key, comp.b_key
            s_c = comp.s_c.reversed()
        records.append(
            ComponentRecord(
                vertices=tuple(sorted(b_ids + d_ids)),
                side_b=side_b,
                side_d=side_d,
                key_b=key_b,
                key_d=key_d,
                s_c=s_c,
            )
        )
    bundle = DescriptionBundle(
        n=next_id,
        k=spec.k,
        sigma_x=base,
        x_ids=tuple(range(nx)),
        q_spec=tuple((key, frozenset(q_members[key])) for key in sorted(q_members)),
        gamma_edges=frozenset(gamma_edges),
        components=tuple(records),
    )
    sigma = reconstruct(bundle)
    x = frozenset(range(nx))
    rebuilt_base, _ = induced(sigma, x)
    if rebuilt_base != base:
        raise PostVerificationFailed("base restriction differs from the spec base")
    analysis = OutsideAnalysis(sigma, x)
    if dict(analysis.partition.blocks) != dict(bundle.q_spec):
        raise PostVerificationFailed(
            f"outside partition mismatch: built {analysis.partition.blocks}"
        )
    if analysis.gamma.edges != bundle.gamma_edges:
        raise PostVerificationFailed(
            f"outside graph mismatch: built {sorted(analysis.gamma.edges)}"
        )
    if not analysis.statements_hold_up_to(5):
        raise PostVerificationFailed("an odd-size statement up to S5 fails")
    if not analysis.outside_critical:
        raise PostVerificationFailed("built structure is not outside-critical")
    return BuildResult(sigma, x, bundle, analysis)
