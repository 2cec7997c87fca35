"""Exact DP-coloring (correspondence coloring) solvers, choosability and
chromatic-number oracles, plane embeddings, and a discharging audit engine."""

from .graphs import (
    Graph,
    CycleSpectrum,
    SelfLoop,
    MalformedGraph6,
    from_edge_list,
    parse_graph6,
    encode_graph6,
    parse_edge_list,
    cycle_spectrum,
    satisfied_variants,
    FORBIDDEN_VARIANTS,
    delete_vertices,
    is_connected,
    complete_graph,
    cycle_graph,
    path_graph,
    complete_bipartite,
)
from .planar import (
    Face,
    PlaneEmbedding,
    Disconnected,
    NotGenusZero,
    NonPlanarOrTooLarge,
    NotOnFace,
    trace_faces,
    face_adjacency,
    classify_vertex,
    brute_force_embed,
    rotation_from_faces,
    load_embedding,
    dump_embedding,
)
from .dp import (
    InvalidMatching,
    NonUniformLists,
    NotSpanningTree,
    MatchingAssignment,
    CoverGraph,
    uniform_lists,
    build_cover,
    find_coloring,
    is_valid_coloring,
    from_list_assignment,
    gauge_normalize,
    parse_matching_file,
    format_matching_file,
)
from .solver import (
    BudgetExceeded,
    AdversaryCertificate,
    DEFAULT_BUDGET,
    chi,
    is_k_colorable,
    degeneracy,
    is_dp_k_colorable,
    chi_dp,
    is_k_choosable,
    chi_list,
    normalized_assignment_count,
)
from .reducibility import (
    InvalidPartial,
    ConditionsViolated,
    ExtensionCheck,
    ConfigPattern,
    residual_lists,
    check_extension_order,
    extend_coloring,
    min_degree_extend,
    find_pattern,
    certify_reducible,
    pattern_from_json,
    pattern_to_json,
)
from .discharging import (
    ChargeSumMismatch,
    ConservationViolated,
    ForbiddenCyclePresent,
    RuleVariant,
    VARIANTS,
    Transfer,
    ChargeState,
    FaceRoles,
    FaceStats,
    initial_charges,
    classify_face_roles,
    path_stats,
    face_stats,
    face_charge_capacity,
    face_charge_demand,
    apply_rules,
    audit,
    AuditReport,
    format_transfer_log,
)

__version__ = "0.1.0"
