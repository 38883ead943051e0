"""Executable verifiers for the structural theorems, plus the
describe/reconstruct pair.

Every verifier evaluates all of a theorem's assertions unconditionally and
reports the hypothesis status separately; a report is a COUNTEREXAMPLE only
when the hypotheses held and the claimed implication or equivalence failed.
Witnesses use least-vertex tie-breaking so reports are reproducible.

The working form of the odd-size hypotheses: "(Sk) holds" is evaluated as
"(Sm) holds for every odd m <= min(k, |outside| - 1)". At small outside
sizes the literal size-k statement is vacuous while the smaller statements
are the operative part, and without the smaller statements the theorems are
false (an extension vertex plus its twins satisfies the literal size-3
statement yet breaks the component equivalences).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .bits import bits_tuple, mask_from
from .core import PairClass, TwoStructure, induced
from .errors import (
    HypothesesFailed,
    InconsistentBundle,
    InconsistentSC,
    NoPair,
    NoPartner,
    UnresolvedCase,
)
from .graphs import Graph
from .halfgraph import HalfGraphCertificate, _try_side
from .modular import _is_prime_mask, graph_is_critical, graph_is_prime
from .outside import (
    ComponentRecord,
    OutsideAnalysis,
    QBlockKey,
    QKind,
)

CONSISTENT = "CONSISTENT"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one theorem check on one instance."""

    theorem: str
    hypotheses: tuple[tuple[str, bool], ...]
    assertions: tuple[tuple[str, bool], ...]
    verdict: str
    witness: Optional[dict] = None

    @property
    def hypotheses_held(self) -> bool:
        return all(v for _, v in self.hypotheses)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses": {k: v for k, v in self.hypotheses},
            "assertions": {k: v for k, v in self.assertions},
            "verdict": self.verdict,
            "witness": self.witness,
        }


def _get(sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis]):
    if analysis is not None:
        return analysis
    return OutsideAnalysis(sigma, x)


def _equivalence_report(
    theorem: str,
    hypotheses: tuple[tuple[str, bool], ...],
    assertions: tuple[tuple[str, bool], ...],
    witness: Optional[dict] = None,
) -> TheoremReport:
    held = all(v for _, v in hypotheses)
    values = {v for _, v in assertions}
    verdict = COUNTEREXAMPLE if held and len(values) > 1 else CONSISTENT
    return TheoremReport(
        theorem, hypotheses, assertions, verdict, witness if verdict == COUNTEREXAMPLE else witness
    )


# -- parity and pair-removal theorems -----------------------------------------


def check_parity(
    sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis] = None
) -> TheoremReport:
    """A prime host with at least two outside vertices admits a prime
    two-vertex extension of the base (an outside-graph edge)."""
    a = _get(sigma, x, analysis)
    hyps = (
        ("sigma_prime", a.sigma_prime),
        ("outside_at_least_2", len(a.outside_vertices) >= 2),
    )
    edge = min(a.gamma.edges) if a.gamma.edges else None
    assertion = edge is not None
    held = all(v for _, v in hyps)
    verdict = COUNTEREXAMPLE if held and not assertion else CONSISTENT
    witness = {"edge": list(edge)} if edge else None
    return TheoremReport("parity", hyps, (("prime_pair_exists", assertion),), verdict, witness)


def find_noncritical_pair(
    sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis] = None
) -> tuple[int, int]:
    """Least outside pair whose joint removal keeps sigma prime.

    Guaranteed to exist for prime sigma with prime base and at least six
    outside vertices; a miss raises NoPair and falsifies the claim.
    """
    a = _get(sigma, x, analysis)
    if len(a.outside_vertices) < 6:
        raise HypothesesFailed("needs at least 6 outside vertices")
    if not a.sigma_prime:
        raise HypothesesFailed("sigma must be prime")
    for v, w in combinations(a.outside_vertices, 2):
        if a.deletion_prime((1 << v) | (1 << w)):
            return (v, w)
    raise NoPair("no removable outside pair; pair-removal claim falsified")


def check_thm_mys_ext(
    sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis] = None
) -> TheoremReport:
    """With an asymmetric q-block present, four outside vertices already
    guarantee a removable outside pair."""
    a = _get(sigma, x, analysis)
    hyps = (
        ("sigma_prime", a.sigma_prime),
        ("q_a_nonempty", len(a.partition.q_a_keys()) > 0),
        ("outside_at_least_4", len(a.outside_vertices) >= 4),
    )
    pair = None
    for v, w in combinations(a.outside_vertices, 2):
        if a.deletion_prime((1 << v) | (1 << w)):
            pair = (v, w)
            break
    held = all(v for _, v in hyps)
    verdict = COUNTEREXAMPLE if held and pair is None else CONSISTENT
    witness = {"pair": list(pair)} if pair else None
    return TheoremReport(
        "thm_mys_ext", hyps, (("removable_pair_exists", pair is not None),), verdict, witness
    )


# -- component equivalence theorems --------------------------------------------


def _component_graph(a: OutsideAnalysis, rec: ComponentRecord) -> Graph:
    return a.gamma.induced(rec.vertices)


def check_thm_main_1(
    sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis] = None
) -> TheoremReport:
    """Primality passes to components: sigma prime <=> every component's
    extension is prime <=> every component is an edge or prime of size >= 4."""
    a = _get(sigma, x, analysis)
    hyps = (("s3", a.statements_hold_up_to(3)),)
    a1 = a.sigma_prime
    per_comp = []
    a2 = True
    a3 = True
    for rec in a.components:
        comp_mask = mask_from(rec.vertices)
        ext_prime = a.extension_prime(comp_mask)
        nv = len(rec.vertices)
        if nv == 2:
            shape_ok = True
        elif nv >= 4:
            shape_ok = graph_is_prime(_component_graph(a, rec))
        else:
            shape_ok = False
        a2 = a2 and ext_prime
        a3 = a3 and shape_ok
        per_comp.append(
            {"vertices": list(rec.vertices), "extension_prime": ext_prime, "edge_or_prime": shape_ok}
        )
    asserts = (("a1_sigma_prime", a1), ("a2_extensions_prime", a2), ("a3_components_prime", a3))
    witness = {"components": per_comp} if len({a1, a2, a3}) > 1 else None
    return _equivalence_report("thm_main_1", hyps, asserts, witness)


def check_thm_main_2(
    sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis] = None
) -> TheoremReport:
    """Partial criticality passes to components: outside-critical <=> every
    component's extension is component-critical <=> every component is an
    edge or critical of size >= 4."""
    a = _get(sigma, x, analysis)
    hyps = (("s5", a.statements_hold_up_to(5)),)
    a1 = a.outside_critical
    per_comp = []
    a2 = True
    a3 = True
    for rec in a.components:
        comp_mask = mask_from(rec.vertices)
        ext_crit = a.extension_prime(comp_mask) and all(
            not a.extension_prime(comp_mask & ~(1 << c)) for c in rec.vertices
        )
        nv = len(rec.vertices)
        if nv == 2:
            shape_ok = True
        elif nv >= 4:
            shape_ok = graph_is_critical(_component_graph(a, rec))
        else:
            shape_ok = False
        a2 = a2 and ext_crit
        a3 = a3 and shape_ok
        per_comp.append(
            {
                "vertices": list(rec.vertices),
                "extension_critical": ext_crit,
                "edge_or_critical": shape_ok,
            }
        )
    asserts = (
        ("a1_outside_critical", a1),
        ("a2_extensions_critical", a2),
        ("a3_components_critical", a3),
    )
    witness = {"components": per_comp} if len({a1, a2, a3}) > 1 else None
    return _equivalence_report("thm_main_2", hyps, asserts, witness)


def check_cor_main_2(
    sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis] = None
) -> TheoremReport:
    """(S5) together with primality is equivalent to outside-criticality;
    an outside-critical instance also has an even outside."""
    a = _get(sigma, x, analysis)
    lhs = a.statements_hold_up_to(5) and a.sigma_prime
    rhs = a.outside_critical
    parity_ok = (not rhs) or (len(a.outside_vertices) % 2 == 0)
    asserts = (("s5_and_prime", lhs), ("outside_critical", rhs))
    held = True
    violated = (lhs != rhs) or not parity_ok
    verdict = COUNTEREXAMPLE if held and violated else CONSISTENT
    witness = None
    if verdict == COUNTEREXAMPLE:
        witness = {"outside_size": len(a.outside_vertices), "parity_ok": parity_ok}
    return TheoremReport(
        "cor_main_2",
        (),
        asserts + (("outside_even_when_critical", parity_ok),),
        verdict,
        witness,
    )


# -- the partner-vertex theorem --------------------------------------------------


def component_certificate(
    a: OutsideAnalysis, rec: ComponentRecord
) -> HalfGraphCertificate:
    """Half-graph certificate of a component with the declared b-side as the
    ordered side. Valid components of critical instances always admit one."""
    if rec.singleton:
        raise InconsistentSC(f"isolated component {rec.vertices} has no certificate")
    comp = _component_graph(a, rec)
    cert = _try_side(comp, frozenset(rec.side_b or ()), frozenset(rec.side_d or ()))
    if not isinstance(cert, HalfGraphCertificate):
        raise InconsistentSC(
            f"component {rec.vertices} is not a half graph ({cert.reason})"
        )
    return cert


def predicted_partner(a: OutsideAnalysis, v: int) -> int:
    """Appendix partner: phi of v on the ordered side, phi-inverse on the other."""
    rec = a.component_of(v)
    if rec.singleton:
        raise NoPartner(f"vertex {v} is isolated in the outside graph")
    cert = component_certificate(a, rec)
    if v in cert.phi:
        return cert.phi[v]
    for u, w in cert.phi.items():
        if w == v:
            return u
    raise AssertionError(f"vertex {v} missing from its component certificate")


@dataclass(frozen=True)
class PartnerResult:
    """Partner of an outside vertex: removing both keeps the remaining
    outside critical. ``partner`` is the canonical choice predicted by the
    component bijection; ``all_partners`` (optional) lists every valid one."""

    vertex: int
    partner: int
    all_partners: Optional[tuple[int, ...]] = None


def _partner_valid(a: OutsideAnalysis, v: int, y: int) -> bool:
    pair = (1 << v) | (1 << y)
    if not a.deletion_prime(pair):
        return False
    return all(
        not a.deletion_prime(pair | (1 << u))
        for u in a.outside_vertices
        if u != v and u != y
    )


def find_partner(
    sigma: TwoStructure,
    x: Iterable[int],
    v: int,
    analysis: Optional[OutsideAnalysis] = None,
    collect_all: bool = False,
) -> PartnerResult:
    """Partner vertex for an outside vertex of an outside-critical instance.

    Requires (S5) and outside-criticality. The returned partner is the
    component-bijection image (or preimage) of v, verified directly against
    the definition; NoPartner signals a falsified claim. With
    ``collect_all`` the exhaustive ascending list of valid partners is
    attached; the canonical partner need not be the least one.
    """
    a = _get(sigma, x, analysis)
    if not (a.outside_mask >> v) & 1:
        raise HypothesesFailed(f"vertex {v} is not outside the base")
    if not a.statements_hold_up_to(5):
        raise HypothesesFailed("statement S5 does not hold")
    if not a.outside_critical:
        raise HypothesesFailed("sigma is not outside-critical")
    partner = predicted_partner(a, v)
    if not _partner_valid(a, v, partner):
        raise NoPartner(
            f"predicted partner {partner} of {v} failed verification; claim falsified"
        )
    all_partners = None
    if collect_all:
        all_partners = tuple(
            y for y in a.outside_vertices if y != v and _partner_valid(a, v, y)
        )
    return PartnerResult(v, partner, all_partners)


# -- describe / reconstruct -------------------------------------------------------


@dataclass(frozen=True)
class DescriptionBundle:
    """Everything that determines an outside-critical instance: the base,
    the q-blocks, the outside graph, and each component's edge class."""

    n: int
    k: int
    sigma_x: TwoStructure
    x_ids: tuple[int, ...]
    q_spec: tuple[tuple[QBlockKey, frozenset[int]], ...]
    gamma_edges: frozenset[tuple[int, int]]
    components: tuple[ComponentRecord, ...]

    @cached_property
    def s_map(self) -> dict[int, PairClass]:
        return {
            i: rec.s_c
            for i, rec in enumerate(self.components)
            if rec.s_c is not None
        }

    @cached_property
    def key_of(self) -> dict[int, QBlockKey]:
        return {v: key for key, members in self.q_spec for v in members}

    @cached_property
    def outside_ids(self) -> tuple[int, ...]:
        out: set[int] = set()
        for _, members in self.q_spec:
            out |= members
        return tuple(sorted(out))


def _require_critical(a: OutsideAnalysis) -> None:
    if not a.statements_hold_up_to(5):
        raise HypothesesFailed("statement S5 does not hold")
    if not a.outside_critical:
        raise HypothesesFailed("sigma is not outside-critical")


def describe(
    sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis] = None
) -> DescriptionBundle:
    """Assemble the determining data of an outside-critical instance."""
    a = _get(sigma, x, analysis)
    _require_critical(a)
    sigma_x, x_ids = induced(sigma, a.x_vertices)
    return DescriptionBundle(
        n=sigma.n,
        k=sigma.k,
        sigma_x=sigma_x,
        x_ids=x_ids,
        q_spec=a.partition.blocks,
        gamma_edges=a.gamma.edges,
        components=a.components,
    )


def nonedge_pair(
    kb: QBlockKey, kd: QBlockKey, base_label
) -> PairClass:
    """Label pair of a non-adjacent cross-p-block pair (kb-side first).

    ``base_label(a, b)`` must return the base label in original ids.
    """
    if kb.kind == QKind.ANGLE:
        return PairClass(kb.e, kb.f)
    if kd.kind == QKind.ANGLE:
        return PairClass(kd.f, kd.e)
    return PairClass(base_label(kb.alpha, kd.alpha), base_label(kd.alpha, kb.alpha))


def _validate_bundle(bundle: DescriptionBundle) -> Graph:
    """Check the bundle against the fixed constraint list; first hit names
    the violation. Returns the outside graph for reuse."""
    n = bundle.n
    x_set = set(bundle.x_ids)
    outside: set[int] = set()
    for key, members in bundle.q_spec:
        if not members:
            raise InconsistentBundle("q_spec_not_partition: empty block")
        if members & outside:
            raise InconsistentBundle("q_spec_not_partition: overlapping blocks")
        outside |= members
    if outside & x_set or (x_set | outside) != set(range(n)):
        raise InconsistentBundle("q_spec_not_partition: ids do not tile the vertex range")
    if bundle.sigma_x.n != len(bundle.x_ids) or not _is_prime_mask(
        bundle.sigma_x, bundle.sigma_x.full_mask
    ):
        raise InconsistentBundle("base_not_prime")
    k = bundle.k
    pblock_pairs: dict[tuple, set[frozenset[int]]] = {}
    for key, _ in bundle.q_spec:
        if key.kind == QKind.EXT:
            raise InconsistentBundle("ext_block_nonempty")
        if not (0 <= key.e < k and 0 <= key.f < k):
            raise InconsistentBundle("key_out_of_range: label id")
        if key.kind == QKind.ALPHA and key.alpha not in x_set:
            raise InconsistentBundle("key_out_of_range: alpha not a base vertex")
        pblock_pairs.setdefault(key.pblock, set()).add(frozenset((key.e, key.f)))
    for pb, pairs in pblock_pairs.items():
        if len(pairs) > 1:
            raise InconsistentBundle("pblock_label_pair_conflict")
    key_of = bundle.key_of
    for u, w in bundle.gamma_edges:
        if u not in outside or w not in outside:
            raise InconsistentBundle("components_mismatch: edge outside the outside set")
        if key_of[u].pblock == key_of[w].pblock:
            raise InconsistentBundle("gamma_edge_inside_pblock")
    gamma = Graph.build(sorted(outside), bundle.gamma_edges)
    actual = gamma.components()
    declared = [rec.vertices for rec in bundle.components]
    if declared != actual:
        raise InconsistentBundle("components_mismatch: component list")
    for rec in bundle.components:
        if rec.singleton:
            continue
        if rec.side_b is None or rec.side_d is None or rec.key_b is None or rec.key_d is None:
            raise InconsistentBundle("components_mismatch: missing sides")
        if sorted(rec.side_b + rec.side_d) != list(rec.vertices):
            raise InconsistentBundle("components_mismatch: sides do not tile the component")
        if not (rec.key_b < rec.key_d):
            raise InconsistentBundle("components_mismatch: side keys out of order")
        if any(key_of[v] != rec.key_b for v in rec.side_b) or any(
            key_of[v] != rec.key_d for v in rec.side_d
        ):
            raise InconsistentBundle("components_mismatch: side membership")
        bset = set(rec.side_b)
        for u, w in bundle.gamma_edges:
            if u in rec.vertices:
                if (u in bset) == (w in bset):
                    raise InconsistentBundle("components_mismatch: edge within one side")
        if rec.s_c is None:
            raise InconsistentBundle("s_c_missing")
        if not (0 <= rec.s_c.forward < k and 0 <= rec.s_c.backward < k):
            raise InconsistentBundle("key_out_of_range: s_c label id")
    comp_of = {}
    for i, rec in enumerate(bundle.components):
        for v in rec.vertices:
            comp_of[v] = i
    for key, members in bundle.q_spec:
        if not key.symmetric and len({comp_of[v] for v in members}) > 1:
            raise InconsistentBundle("qa_block_split_across_components")
    pos = {v: i for i, v in enumerate(bundle.x_ids)}

    def base_label(aa: int, bb: int) -> int:
        return bundle.sigma_x.label(pos[aa], pos[bb])

    for rec in bundle.components:
        if rec.singleton:
            continue
        assert rec.key_b is not None and rec.key_d is not None and rec.s_c is not None
        if rec.s_c == nonedge_pair(rec.key_b, rec.key_d, base_label):
            raise InconsistentBundle("s_c_equals_nonedge")
    return gamma


def reconstruct(bundle: DescriptionBundle) -> TwoStructure:
    """Rebuild the full structure a bundle determines.

    On a bundle produced by describe this is an exact inverse: same ids,
    same labels. The label of every pair follows from one of the rules
    below; a pair no rule covers raises UnresolvedCase.
    """
    gamma = _validate_bundle(bundle)
    n, k = bundle.n, bundle.k
    x_ids = bundle.x_ids
    key_of = bundle.key_of
    pos = {v: i for i, v in enumerate(x_ids)}
    lab = [[-1] * n for _ in range(n)]

    # base labels
    for i, vi in enumerate(x_ids):
        for j, vj in enumerate(x_ids):
            if i != j:
                lab[vi][vj] = bundle.sigma_x.label(i, j)

    # base <-> outside: uniform for the angle class, alpha-mimicking otherwise
    for key, members in bundle.q_spec:
        for v in sorted(members):
            if key.kind == QKind.ANGLE:
                for a in x_ids:
                    lab[v][a] = key.e
                    lab[a][v] = key.f
            else:
                al = key.alpha
                lab[v][al] = key.e
                lab[al][v] = key.f
                for a in x_ids:
                    if a != al:
                        lab[a][v] = lab[a][al]
                        lab[v][a] = lab[al][a]

    # within one q-block: constant on symmetric blocks, a linear order on
    # asymmetric ones, oriented by the neighborhood chain of the component
    adj = gamma.adjacency
    for key, members in bundle.q_spec:
        ms = sorted(members)
        if key.symmetric:
            for u in ms:
                for w in ms:
                    if u != w:
                        lab[u][w] = key.e
            continue
        for u, w in combinations(ms, 2):
            if adj[u] > adj[w]:
                hi, lo = u, w
            elif adj[w] > adj[u]:
                hi, lo = w, u
            else:
                raise UnresolvedCase(
                    f"vertices {u},{w} of an asymmetric block have incomparable neighborhoods"
                )
            # hi has the strictly larger neighborhood
            if key.kind == QKind.ANGLE:
                lab[hi][lo], lab[lo][hi] = key.f, key.e
            else:
                lab[hi][lo], lab[lo][hi] = key.e, key.f

    # mirrored asymmetric blocks inside one p-block: constant cross links
    keys = [key for key, _ in bundle.q_spec]
    spec_dict = dict(bundle.q_spec)
    for key in keys:
        if key.symmetric:
            continue
        mirror = QBlockKey(key.kind, key.alpha, key.f, key.e)
        if mirror in spec_dict and key.e < key.f:
            for u in spec_dict[key]:
                for w in spec_dict[mirror]:
                    lab[u][w] = key.e
                    lab[w][u] = key.f

    # across p-blocks: component edge class on edges, forced labels elsewhere
    def base_label(aa: int, bb: int) -> int:
        return bundle.sigma_x.label(pos[aa], pos[bb])

    edge_class: dict[tuple[int, int], PairClass] = {}
    for rec in bundle.components:
        if rec.singleton:
            continue
        bset = set(rec.side_b or ())
        for u, w in bundle.gamma_edges:
            if u in rec.vertices:
                assert rec.s_c is not None
                b, d = (u, w) if u in bset else (w, u)
                edge_class[(b, d)] = rec.s_c

    outside_sorted = bundle.outside_ids
    for u, w in combinations(outside_sorted, 2):
        ku, kw = key_of[u], key_of[w]
        if ku.pblock == kw.pblock:
            continue
        e = (u, w) if u < w else (w, u)
        if e in gamma.edges:
            if (u, w) in edge_class:
                pc = edge_class[(u, w)]
                lab[u][w], lab[w][u] = pc.forward, pc.backward
            else:
                pc = edge_class[(w, u)]
                lab[w][u], lab[u][w] = pc.forward, pc.backward
            continue
        pc = nonedge_pair(ku, kw, base_label)
        lab[u][w], lab[w][u] = pc.forward, pc.backward

    flat: list[int] = []
    for v in range(n):
        for w in range(n):
            if v == w:
                continue
            if lab[v][w] < 0:
                raise UnresolvedCase(f"no rule determined the label of ({v},{w})")
            flat.append(lab[v][w])
    return TwoStructure(n, k, tuple(flat))


# -- the module/primality description facts ---------------------------------------


def _classify_removed(
    sigma: TwoStructure, b: int, phi: int, x_mask: int
) -> tuple[str, Optional[int]]:
    """Where phi lands in the outside classes of the base Y = V - {b, phi}
    inside sigma - b: the uniform class ("angle") or a pairing vertex."""
    rows = sigma.rows
    y_vertices = [u for u in range(sigma.n) if u != b and u != phi]
    a0 = y_vertices[0]
    if all(
        rows[phi][u] == rows[phi][a0] and rows[u][phi] == rows[a0][phi]
        for u in y_vertices
    ):
        return "angle", None
    for alpha in y_vertices:
        if all(
            rows[w][alpha] == rows[w][phi] and rows[alpha][w] == rows[phi][w]
            for w in y_vertices
            if w != alpha
        ):
            return "alpha", alpha
    return "none", None


def _unique_nontrivial_module(
    sigma: TwoStructure, universe: int, m0: int
) -> bool:
    """True iff m0 is the only nontrivial module of sigma[universe].

    Every pair's minimal module must be m0 or the whole universe; any other
    value exposes a second nontrivial module.
    """
    from .modular import _closure_mask, _is_module_mask

    if not _is_module_mask(sigma, m0, universe):
        return False
    verts = bits_tuple(universe)
    for i, p in enumerate(verts):
        bp = 1 << p
        for q in verts[i + 1 :]:
            c = _closure_mask(sigma, bp | (1 << q), universe)
            if c != universe and c != m0:
                return False
    return True


def check_description_facts(
    sigma: TwoStructure, x: Iterable[int], analysis: Optional[OutsideAnalysis] = None
) -> TheoremReport:
    """Per-vertex module description and the primality-graph restriction.

    For every ordered-side vertex b of every component: removing b and its
    partner keeps sigma prime, and sigma - b has exactly one nontrivial
    module, of one of three exclusive shapes tied to the position of b in
    the component order. For components of size >= 6 the primality graph of
    sigma restricted to the component equals the component's own.
    """
    a = _get(sigma, x, analysis)
    _require_critical(a)
    full = a.sigma.full_mask
    per_comp = []
    pair_ok = True
    cases_ok = True
    prim_ok = True
    for rec in a.components:
        if rec.singleton:
            raise InconsistentSC("critical instance cannot have isolated outside vertices")
        cert = component_certificate(a, rec)
        order = cert.side_x
        comp_graph = _component_graph(a, rec)
        detail = {"vertices": list(rec.vertices), "cases": []}
        for idx, b in enumerate(order):
            phi = cert.phi[b]
            ok_pair = a.deletion_prime((1 << b) | (1 << phi))
            pair_ok = pair_ok and ok_pair
            kind, alpha = _classify_removed(sigma, b, phi, a.x_mask)
            universe = full & ~(1 << b)
            if kind == "angle":
                m0 = universe & ~(1 << phi)
                case = 1
            elif alpha is not None and (a.x_mask >> alpha) & 1:
                m0 = (1 << alpha) | (1 << phi)
                case = 2
            elif alpha is not None and idx > 0 and alpha == cert.phi[order[idx - 1]]:
                m0 = (1 << alpha) | (1 << phi)
                case = 3
            else:
                m0 = 0
                case = 0
            shrunk = comp_graph.remove([b])
            has_isolated = any(
                not shrunk.neighbors(v) for v in shrunk.vertices
            )
            if case in (1, 2):
                case_ok = idx == 0 and has_isolated and _unique_nontrivial_module(
                    sigma, universe, m0
                )
            elif case == 3:
                case_ok = not has_isolated and _unique_nontrivial_module(
                    sigma, universe, m0
                )
            else:
                case_ok = False
            cases_ok = cases_ok and case_ok
            detail["cases"].append(
                {
                    "b": b,
                    "phi": phi,
                    "case": case,
                    "alpha": alpha,
                    "pair_prime": ok_pair,
                    "ok": case_ok,
                }
            )
        if len(rec.vertices) >= 6:
            pg_local = _primality_edges_of_graph(comp_graph)
            pg_global = frozenset(
                (u, w)
                for u, w in combinations(rec.vertices, 2)
                if a.deletion_prime((1 << u) | (1 << w))
            )
            restriction_ok = pg_local == pg_global
            neighborhoods_ok = _check_primality_neighborhoods(
                a, rec, cert, pg_local, detail
            )
            prim_ok = prim_ok and restriction_ok and neighborhoods_ok
            detail["primality_restriction_ok"] = restriction_ok
            detail["primality_neighborhoods_ok"] = neighborhoods_ok
        per_comp.append(detail)
    hyps = (("s5", True), ("outside_critical", True))
    asserts = (
        ("pair_removals_prime", pair_ok),
        ("module_cases_ok", cases_ok),
        ("primality_restriction_ok", prim_ok),
    )
    bad = not (pair_ok and cases_ok and prim_ok)
    verdict = COUNTEREXAMPLE if bad else CONSISTENT
    return TheoremReport(
        "description_facts", hyps, asserts, verdict, {"components": per_comp} if bad else None
    )


def _primality_edges_of_graph(g: Graph) -> frozenset[tuple[int, int]]:
    edges = []
    for u, w in combinations(g.vertices, 2):
        if graph_is_prime(g.remove([u, w])):
            edges.append((u, w))
    return frozenset(edges)


def _check_primality_neighborhoods(
    a: OutsideAnalysis,
    rec: ComponentRecord,
    cert: HalfGraphCertificate,
    pg_local: frozenset[tuple[int, int]],
    detail: dict,
) -> bool:
    """Per-vertex neighborhood claims relating the local and global
    primality graphs on a component of size >= 6."""
    local_adj: dict[int, set[int]] = {v: set() for v in rec.vertices}
    for u, w in pg_local:
        local_adj[u].add(w)
        local_adj[w].add(u)
    ok = True
    by_b = {c["b"]: c for c in detail["cases"]}
    for b in cert.side_x:
        phi = cert.phi[b]
        case = by_b[b]["case"]
        n_local = local_adj[b]
        n_global = {
            w
            for w in range(a.sigma.n)
            if w != b and a.deletion_prime((1 << b) | (1 << w))
        }
        if case == 2:
            alpha = by_b[b]["alpha"]
            ok = ok and n_local == {phi} and n_global == {alpha, phi}
        else:
            ok = ok and n_local == n_global
    return ok
