"""Low-weight perfect matchings in +/-1 edge-labeled complete graphs.

Public surface, by area:

* types and sign arithmetic: :mod:`lowpm.core`
* exchange local search, exact oracle, sign-restricted matchings:
  :mod:`lowpm.solver`
* instance families and closed-form bounds: :mod:`lowpm.constructions`
* verification sweeps: :mod:`lowpm.verifier`
* general-graph maximum matching: :mod:`lowpm.blossom`
"""

from .blossom import matching_number, maximum_matching
from .constructions import (
    BoundQuery,
    clique_instance,
    eg_edge_bound,
    eg_extremal_graph,
    proposition2_instance,
    random_graph,
    random_with_imbalance,
    thm2_bound,
)
from .core import (
    InstanceFormatError,
    InvalidPairError,
    LowpmError,
    MatchingError,
    Pair,
    ParameterError,
    PerfectMatching,
    SignedCompleteGraph,
    SimpleGraph,
    canonical_pair_index,
    iter_pairs,
    matching_split,
    pair_count,
    parse_instance,
    parse_matching,
    serialize_instance,
    serialize_matching,
    sigma_matching,
    sigma_total,
    sign_subgraph,
)
from .rng import SplitMix64
from .solver import (
    DEFAULT_ORACLE_LIMIT,
    Exchange,
    OracleLimitError,
    SearchPolicy,
    SolveReport,
    apply_exchange,
    enumerate_exchanges,
    enumerate_perfect_matchings,
    local_search_min_weight,
    max_matching,
    oracle_min_weight,
    pm_from_sign_max_matching,
    random_perfect_matching,
)
from .verifier import (
    VerifyReport,
    verify_erdos_gallai,
    verify_prop2,
    verify_theorem1,
    verify_theorem2,
    verify_tightness,
)

__version__ = "0.1.0"

__all__ = [
    "BoundQuery",
    "DEFAULT_ORACLE_LIMIT",
    "Exchange",
    "InstanceFormatError",
    "InvalidPairError",
    "LowpmError",
    "MatchingError",
    "OracleLimitError",
    "Pair",
    "ParameterError",
    "PerfectMatching",
    "SearchPolicy",
    "SignedCompleteGraph",
    "SimpleGraph",
    "SolveReport",
    "SplitMix64",
    "VerifyReport",
    "apply_exchange",
    "canonical_pair_index",
    "clique_instance",
    "eg_edge_bound",
    "eg_extremal_graph",
    "enumerate_exchanges",
    "enumerate_perfect_matchings",
    "iter_pairs",
    "local_search_min_weight",
    "matching_number",
    "matching_split",
    "max_matching",
    "maximum_matching",
    "oracle_min_weight",
    "pair_count",
    "parse_instance",
    "parse_matching",
    "pm_from_sign_max_matching",
    "proposition2_instance",
    "random_graph",
    "random_perfect_matching",
    "random_with_imbalance",
    "serialize_instance",
    "serialize_matching",
    "sigma_matching",
    "sigma_total",
    "sign_subgraph",
    "thm2_bound",
    "verify_erdos_gallai",
    "verify_prop2",
    "verify_theorem1",
    "verify_theorem2",
    "verify_tightness",
]
