"""Permutation groups, coset graphs and arc-transitive graph analysis."""

__version__ = "0.1.0"

from .errors import (
    CapExceeded,
    ConnectionSetNotSymmetric,
    ConnectorNotInGroup,
    DataIntegrityError,
    DegreeMismatch,
    IdentityInConnectionSet,
    IndexExceedsCap,
    NoSylow7,
    NotRegular,
    OrbitExceedsCap,
    OrderExceedsCap,
    ParseError,
    SubgroupNotContained,
    SymcosetError,
    UnknownTypeName,
    Unsupported,
)
from .perm import Permutation, format_cycles, parse_cycles
from .groups import (
    GroupFingerprint,
    GroupOrder,
    PermutationGroup,
    StabilizerChain,
    build_chain,
    conjugate_subgroup,
    enumerate_elements,
    fingerprint,
    intersection_small,
    matches_type,
    normalizer_small,
    subgroups_small,
    sylow7,
)
from .graphs import Graph, read_edge_list
from .cosets import (
    ActionHomomorphism,
    CosetGraphSpec,
    FeasibilityReport,
    SearchCaps,
    SearchReport,
    build_coset_graph,
    cayley_graph,
    coset_action,
    normal_quotient,
    search_feasible,
    verify_example,
    verify_feasible,
)
from .analysis import (
    CanonicalForm,
    STransitivityReport,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    connected_components,
    is_normal_cayley,
    s_arc_transitivity,
)
from .models import builtin_group, parse_group_literal, resolve_group
