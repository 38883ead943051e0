"""Finite 2-structures, their outside machinery, half-graph recognition,
theorem verifiers, and synthesis of outside-critical instances."""

from .core import (
    HARD_VERTEX_CAP,
    PairClass,
    TwoStructure,
    are_isomorphic,
    from_graph,
    from_matrix,
    induced,
    pair_class,
    remove,
)
from .errors import TwoStructError
from .graphs import Graph, graph_of_structure
from .halfgraph import (
    HalfGraphCertificate,
    Rejection,
    build_h2n,
    is_p5_free,
    recognize_half_graph,
)
from .modular import (
    critical_vertices,
    enumerate_modules,
    is_critical,
    is_module,
    is_prime,
    is_w_critical,
    minimal_module_containing,
    primality_graph,
)
from .outside import (
    BlockStructure,
    ComponentRecord,
    OutsideAnalysis,
    OutsidePartition,
    QBlockKey,
    QKind,
    SkResult,
    alpha_key,
    angle_key,
    block_structure,
    components_with_bipartition,
    epsilon_sets,
    outside_graph,
    outside_partition,
    statement_sk,
)
from .synth import (
    BuildResult,
    ComponentSpec,
    SynthSpec,
    build_partially_critical,
    random_prime,
    random_two_structure,
)
from .theorems import (
    DescriptionBundle,
    PartnerResult,
    TheoremReport,
    check_cor_main_2,
    check_description_facts,
    check_parity,
    check_thm_main_1,
    check_thm_main_2,
    check_thm_mys_ext,
    describe,
    find_noncritical_pair,
    find_partner,
    reconstruct,
)

__version__ = "0.1.0"

__all__ = [
    "HARD_VERTEX_CAP",
    "PairClass",
    "TwoStructure",
    "TwoStructError",
    "are_isomorphic",
    "from_graph",
    "from_matrix",
    "induced",
    "pair_class",
    "remove",
    "Graph",
    "graph_of_structure",
    "HalfGraphCertificate",
    "Rejection",
    "build_h2n",
    "is_p5_free",
    "recognize_half_graph",
    "critical_vertices",
    "enumerate_modules",
    "is_critical",
    "is_module",
    "is_prime",
    "is_w_critical",
    "minimal_module_containing",
    "primality_graph",
    "BlockStructure",
    "ComponentRecord",
    "OutsideAnalysis",
    "OutsidePartition",
    "QBlockKey",
    "QKind",
    "SkResult",
    "alpha_key",
    "angle_key",
    "block_structure",
    "components_with_bipartition",
    "epsilon_sets",
    "outside_graph",
    "outside_partition",
    "statement_sk",
    "BuildResult",
    "ComponentSpec",
    "SynthSpec",
    "build_partially_critical",
    "random_prime",
    "random_two_structure",
    "DescriptionBundle",
    "PartnerResult",
    "TheoremReport",
    "check_cor_main_2",
    "check_description_facts",
    "check_parity",
    "check_thm_main_1",
    "check_thm_main_2",
    "check_thm_mys_ext",
    "describe",
    "find_noncritical_pair",
    "find_partner",
    "reconstruct",
]
