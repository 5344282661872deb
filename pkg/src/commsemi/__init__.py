"""Extremal commutative subsemigroups of finite transformation semigroups.

The package constructs the known maximum-size commutative subsemigroups of
the full and partial transformation semigroups on a small finite set,
verifies the published maxima by exhaustive clique search on commuting
graphs, and implements the tree surgery that converts any finite
commutative semigroup with a unique idempotent into a null semigroup of
the same size.
"""

from .extremal import (
    XiAlpha,
    abelian_witness,
    burns_goldsmith_order,
    e_ix,
    gamma,
    knit_witness,
    null_max,
    null_plus_identity,
    null_semigroup,
    omega_pn,
    xi_alpha,
    xi_table,
)
from .graphs import (
    INFINITY,
    CliqueResult,
    CommGraph,
    girth,
    graph_to_dot,
    knit_degree,
    max_clique,
    max_comm_subsemigroup,
    shortest_left_path,
)
from .graphs import build as build_commuting_graph
from .semigroups import (
    ClosureLimitExceeded,
    InvariantReport,
    SemigroupSet,
    center,
    classify_small_abelian_group,
    closure,
    enumerate_full,
    enumerate_partial,
    enumerate_sym,
    has_unique_idempotent,
    idempotents,
    image_union,
    is_group,
    is_nilpotent,
    is_null,
    minimal_invariant_complement,
    restrict_set,
    unique_idempotent,
)
from .serialization import (
    dumps_semigroup,
    load_semigroup,
    load_semigroup_file,
    semigroup_digest,
    write_semigroup_file,
)
from .transform import (
    PartialTransformation,
    Transformation,
    compose,
    compose_partial,
    embed_partial,
    idempotent_decomposition,
    omega_power,
    product,
    restrict,
)
from .trees import (
    LevelProfile,
    NullifyTrace,
    SemiTree,
    SPartition,
    build_tree,
    element_order,
    level_profile,
    nullify,
    nullify_trace,
    s_partition,
    tree_to_dot,
    validate_tree_lemmas,
    words,
)

__version__ = "0.1.0"

__all__ = [
    "ClosureLimitExceeded",
    "CliqueResult",
    "CommGraph",
    "INFINITY",
    "InvariantReport",
    "LevelProfile",
    "NullifyTrace",
    "PartialTransformation",
    "SPartition",
    "SemiTree",
    "SemigroupSet",
    "Transformation",
    "XiAlpha",
    "abelian_witness",
    "build_commuting_graph",
    "build_tree",
    "burns_goldsmith_order",
    "center",
    "classify_small_abelian_group",
    "closure",
    "compose",
    "compose_partial",
    "dumps_semigroup",
    "e_ix",
    "element_order",
    "embed_partial",
    "enumerate_full",
    "enumerate_partial",
    "enumerate_sym",
    "gamma",
    "girth",
    "graph_to_dot",
    "has_unique_idempotent",
    "idempotent_decomposition",
    "idempotents",
    "image_union",
    "is_group",
    "is_nilpotent",
    "is_null",
    "knit_degree",
    "knit_witness",
    "level_profile",
    "load_semigroup",
    "load_semigroup_file",
    "max_clique",
    "max_comm_subsemigroup",
    "minimal_invariant_complement",
    "null_max",
    "null_plus_identity",
    "null_semigroup",
    "nullify",
    "nullify_trace",
    "omega_pn",
    "omega_power",
    "product",
    "restrict",
    "restrict_set",
    "s_partition",
    "semigroup_digest",
    "shortest_left_path",
    "tree_to_dot",
    "unique_idempotent",
    "validate_tree_lemmas",
    "words",
    "write_semigroup_file",
    "xi_alpha",
    "xi_table",
]
