"""Deterministic verification corpora and the instance-level check runner.

Two corpus families feed the sweep: synthesized outside-critical instances
(prime bases of 4-7 vertices, one to three components, outside size up to
12, symmetric and asymmetric label regimes) and random prime structures in
which a prime proper induced substructure is detected by greedy peeling.

Every check a theorem sweep performs on one instance lives in
``verify_instance``; a counterexample there is a build-failing event for
any corpus produced by this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .bits import mask_from
from .core import PairClass, TwoStructure, from_graph
from .errors import HypothesesFailed, NoPair, NoPartner, SpecInvalid
from .halfgraph import build_h2n
from .modular import _is_module_mask, _is_prime_mask
from .outside import OutsideAnalysis, QBlockKey, QKind, alpha_key, angle_key
from .synth import BuildResult, ComponentSpec, SynthSpec, build_partially_critical
from .theorems import (
    check_cor_main_2,
    check_description_facts,
    check_parity,
    check_thm_main_1,
    check_thm_main_2,
    check_thm_mys_ext,
    find_noncritical_pair,
    find_partner,
    nonedge_pair,
)


def path_structure(n: int) -> TwoStructure:
    return from_graph(n, [(i, i + 1) for i in range(n - 1)])


def rotational_tournament_5() -> TwoStructure:
    """The circulant 5-tournament (i beats i+1 and i+2); prime."""
    arcs = [(i, (i + 1) % 5) for i in range(5)] + [(i, (i + 2) % 5) for i in range(5)]
    return from_graph(5, arcs, as_tournament=True)


def builtin_bases() -> list[tuple[str, TwoStructure]]:
    """Prime bases of 4-7 vertices covering graph, tournament, and
    multi-label regimes."""
    h4, _ = build_h2n(2).to_two_structure()
    h6, _ = build_h2n(3).to_two_structure()
    bases = [
        ("p4", path_structure(4)),
        ("p5", path_structure(5)),
        ("p6", path_structure(6)),
        ("p7", path_structure(7)),
        ("h4", h4),
        ("h6", h6),
        ("t5", rotational_tournament_5()),
    ]
    from .synth import random_prime

    bases.append(("r4k3", random_prime(4, 3, seed=104)))
    bases.append(("r5k3", random_prime(5, 3, seed=105)))
    return bases


def _sample_key(
    rng: random.Random,
    pblock: tuple,
    k: int,
    pblock_pairs: dict[tuple, frozenset[int]],
    qa_used: set[QBlockKey],
    asymmetric: bool,
) -> QBlockKey | None:
    """A key for the given p-block consistent with everything chosen so far."""
    fixed = pblock_pairs.get(pblock)
    if fixed is not None:
        pair = sorted(fixed)
        e, f = (pair[0], pair[-1])
        options = [(e, f), (f, e)] if e != f else [(e, e)]
    elif asymmetric and k >= 2:
        e = rng.randrange(k)
        f = rng.choice([l for l in range(k) if l != e])
        options = [(e, f)]
    else:
        e = rng.randrange(k)
        options = [(e, e)]
    rng.shuffle(options)
    for e, f in options:
        if pblock[0] == QKind.ANGLE:
            key = angle_key(e, f)
        else:
            key = alpha_key(pblock[1], e, f)
        if key.symmetric or key not in qa_used:
            return key
    return None


def make_random_spec(rng: random.Random, base: TwoStructure, max_outside: int = 12) -> SynthSpec:
    """One random valid spec over the given base; deterministic in rng state."""
    for _ in range(400):
        k = base.k + rng.choice([0, 0, 0, 1])
        ncomp = rng.randint(1, 3)
        sizes = []
        budget = max_outside
        for _ in range(ncomp):
            m = rng.choice([1, 1, 2, 2, 3])
            if budget - 2 * m < 0:
                break
            sizes.append(m)
            budget -= 2 * m
        if not sizes:
            continue
        pblocks = [(QKind.ANGLE, -1)] + [(QKind.ALPHA, a) for a in range(base.n)]
        pblock_pairs: dict[tuple, frozenset[int]] = {}
        qa_used: set[QBlockKey] = set()
        comps: list[ComponentSpec] = []
        ok = True
        for m in sizes:
            pb, pd = rng.sample(pblocks, 2)
            kb = _sample_key(rng, pb, k, pblock_pairs, qa_used, rng.random() < 0.4)
            if kb is None:
                ok = False
                break
            pblock_pairs[pb] = frozenset((kb.e, kb.f))
            if not kb.symmetric:
                qa_used.add(kb)
            kd = _sample_key(rng, pd, k, pblock_pairs, qa_used, rng.random() < 0.4)
            if kd is None:
                ok = False
                break
            pblock_pairs[pd] = frozenset((kd.e, kd.f))
            if not kd.symmetric:
                qa_used.add(kd)
            forced = nonedge_pair(kb, kd, base.label)
            choices = [
                PairClass(e, f)
                for e in range(k)
                for f in range(k)
                if PairClass(e, f) != forced
            ]
            s_c = rng.choice(choices)
            comps.append(ComponentSpec(m, kb, kd, s_c))
        if not ok:
            continue
        spec = SynthSpec(base=base, k=k, components=tuple(comps))
        try:
            from .synth import validate_spec

            validate_spec(spec)
        except SpecInvalid:
            continue
        return spec
    raise SpecInvalid("could not sample a valid spec; base too constrained")


def synth_corpus(seed: int, count: int, max_outside: int = 12) -> list[BuildResult]:
    """``count`` verified outside-critical instances, deterministic in seed."""
    rng = random.Random(seed)
    bases = builtin_bases()
    out: list[BuildResult] = []
    while len(out) < count:
        _, base = bases[rng.randrange(len(bases))]
        spec = make_random_spec(rng, base, max_outside)
        out.append(build_partially_critical(spec))
    return out


def peel_prime_base(sigma: TwoStructure, min_base: int = 4) -> frozenset[int]:
    """Greedy prime proper induced substructure: repeatedly drop the least
    vertex whose removal keeps the remainder prime. At least one single or
    paired removal always applies to a finite prime structure, so the result
    is a proper subset whenever sigma is prime."""
    current = list(range(sigma.n))
    moved = True
    while moved and len(current) > min_base:
        moved = False
        for v in current:
            rest = [u for u in current if u != v]
            if _is_prime_mask(sigma, mask_from(rest)):
                current = rest
                moved = True
                break
        if not moved and len(current) - 2 >= min_base:
            for v, w in combinations(current, 2):
                rest = [u for u in current if u != v and u != w]
                if _is_prime_mask(sigma, mask_from(rest)):
                    current = rest
                    moved = True
                    break
    if len(current) == sigma.n:
        raise HypothesesFailed("no prime proper induced substructure found")
    return frozenset(current)


def random_instances(
    seed: int, count: int, sizes: tuple[int, ...] = (5, 6, 7, 8), labels: tuple[int, ...] = (2, 3)
) -> list[tuple[str, TwoStructure, frozenset[int]]]:
    """Random prime structures with a peeled prime base."""
    from .synth import random_prime

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice(sizes)
        k = rng.choice(labels)
        sub_seed = rng.randrange(2**32)
        sigma = random_prime(n, k, seed=sub_seed)
        try:
            x = peel_prime_base(sigma)
        except HypothesesFailed:
            continue
        out.append((f"rand-{n}-{k}-{sub_seed}", sigma, x))
    return out


@dataclass
class InstanceReport:
    """Everything the sweep asserts about one instance."""

    label: str
    n: int
    outside: int
    verdicts: dict[str, str] = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    partners_checked: int = 0

    @property
    def clean(self) -> bool:
        return not self.counterexamples and not self.failures

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "outside": self.outside,
            "verdicts": self.verdicts,
            "counterexamples": self.counterexamples,
            "failures": self.failures,
            "skipped": self.skipped,
            "partners_checked": self.partners_checked,
        }


_CHECKS = (
    check_parity,
    check_thm_main_1,
    check_thm_main_2,
    check_cor_main_2,
    check_thm_mys_ext,
)


def verify_instance(
    label: str,
    sigma: TwoStructure,
    x,
    analysis: OutsideAnalysis | None = None,
    primality_checks: bool = True,
) -> InstanceReport:
    """Run every applicable verifier and invariant on one instance."""
    a = analysis if analysis is not None else OutsideAnalysis(sigma, x)
    rep = InstanceReport(label, sigma.n, len(a.outside_vertices))
    for chk in _CHECKS:
        r = chk(sigma, x, analysis=a)
        rep.verdicts[r.theorem] = r.verdict
        if r.verdict != "CONSISTENT":
            rep.counterexamples.append(r.theorem)
    critical_setting = a.statements_hold_up_to(5) and a.outside_critical
    if critical_setting:
        r = check_description_facts(sigma, x, analysis=a)
        rep.verdicts[r.theorem] = r.verdict
        if r.verdict != "CONSISTENT":
            rep.counterexamples.append(r.theorem)
        for v in a.outside_vertices:
            rep.partners_checked += 1
            try:
                find_partner(sigma, x, v, analysis=a)
            except (NoPartner, HypothesesFailed) as exc:
                rep.failures.append(f"partner({v}): {exc}")
    else:
        rep.skipped.append("description_facts")
    if a.sigma_prime and len(a.outside_vertices) >= 6:
        try:
            find_noncritical_pair(sigma, x, analysis=a)
        except NoPair as exc:
            rep.failures.append(f"noncritical_pair: {exc}")
    if primality_checks and a.sigma_prime and sigma.n >= 5:
        _check_primality_bounds(a, rep)
    return rep


def _check_primality_bounds(a: OutsideAnalysis, rep: InstanceReport) -> None:
    """Primality-graph degree bound and its module consequences, plus the
    guaranteed edge at seven or more vertices."""
    sigma = a.sigma
    n = sigma.n
    full = sigma.full_mask
    critical = [v for v in range(n) if not a.deletion_prime(1 << v)]
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    any_edge = False
    for v, w in combinations(range(n), 2):
        if a.deletion_prime((1 << v) | (1 << w)):
            adj[v].append(w)
            adj[w].append(v)
            any_edge = True
    if n >= 7 and not any_edge:
        rep.failures.append("primality_graph_empty_at_n>=7")
    for v in critical:
        deg = len(adj[v])
        if deg > 2:
            rep.failures.append(f"primality_degree({v})={deg}")
            continue
        universe = full & ~(1 << v)
        if deg == 1:
            m = universe & ~(1 << adj[v][0])
            if not _is_module_mask(sigma, m, universe):
                rep.failures.append(f"primality_degree1_module({v})")
        elif deg == 2:
            m = (1 << adj[v][0]) | (1 << adj[v][1])
            if not _is_module_mask(sigma, m, universe):
                rep.failures.append(f"primality_degree2_module({v})")


def run_sweep(
    seed: int,
    synth_count: int,
    random_count: int,
    max_outside: int = 12,
    primality_checks: bool = True,
) -> dict:
    """Full corpus sweep; deterministic in its arguments."""
    instances: list[InstanceReport] = []
    for i, built in enumerate(synth_corpus(seed, synth_count, max_outside)):
        rep = verify_instance(
            f"synth-{i}", built.sigma, built.x, analysis=built.analysis,
            primality_checks=primality_checks,
        )
        instances.append(rep)
    for label, sigma, x in random_instances(seed + 1, random_count):
        instances.append(
            verify_instance(label, sigma, x, primality_checks=primality_checks)
        )
    bad = [r for r in instances if not r.clean]
    return {
        "seed": seed,
        "synth_count": synth_count,
        "random_count": random_count,
        "instances": [r.to_json() for r in instances],
        "counterexamples": sum(len(r.counterexamples) for r in instances),
        "failures": sum(len(r.failures) for r in instances),
        "clean": not bad,
    }
