"""Tools for regular homogeneously traceable graphs with controlled circumference."""
from .anneal import AnnealConfig, anneal_seed_search, random_regular_connected
from .blowup import BlowupMap, BlowupReport, blow_up, verify_k3_blowup, verify_k4_blowup
from .canon import CANON_MAX_ORDER, CanonResult, canonical_form, canonicalize
from .families import (
    FamilyStep,
    FamilyTrace,
    Seed,
    SeedReport,
    SeedSet,
    cubic_family,
    default_seeds,
    load_seeds,
    parse_seed_line,
    quartic_family,
    verify_seed,
)
from .graphs import (
    Graph,
    from_edges,
    petersen,
    cycle_graph,
    path_graph,
    complete_graph,
    encode_graph6,
    decode_graph6,
    degree_profile,
    is_clique,
    is_connected,
    articulation_points,
    independence_number,
)
from .hamilton import (
    CycleWitness,
    HtReport,
    TraceabilityCertificate,
    circumference,
    hamilton_path_from,
    is_doubly_homogeneously_traceable,
    is_hamiltonian,
    is_homogeneously_traceable,
    longest_cycle_vertices,
    on_longest_cycle,
    start_neighbors,
)
from .search import (
    SearchReport,
    connected_classes,
    enumerate_connected,
    enumerate_regular,
    min_circumference_ht,
    min_size_ht_nonham,
    regular_classes,
)
from .seedsearch import FamilyResult, LayoutFamily, discover_seed, families_for, search_family

__all__ = [
    "AnnealConfig",
    "anneal_seed_search",
    "random_regular_connected",
    "BlowupMap",
    "BlowupReport",
    "blow_up",
    "verify_k3_blowup",
    "verify_k4_blowup",
    "CANON_MAX_ORDER",
    "CanonResult",
    "canonical_form",
    "canonicalize",
    "FamilyStep",
    "FamilyTrace",
    "Seed",
    "SeedReport",
    "SeedSet",
    "cubic_family",
    "default_seeds",
    "load_seeds",
    "parse_seed_line",
    "quartic_family",
    "verify_seed",
    "Graph",
    "from_edges",
    "petersen",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "encode_graph6",
    "decode_graph6",
    "degree_profile",
    "is_clique",
    "is_connected",
    "articulation_points",
    "independence_number",
    "CycleWitness",
    "HtReport",
    "TraceabilityCertificate",
    "circumference",
    "hamilton_path_from",
    "is_doubly_homogeneously_traceable",
    "is_hamiltonian",
    "is_homogeneously_traceable",
    "longest_cycle_vertices",
    "on_longest_cycle",
    "start_neighbors",
    "SearchReport",
    "connected_classes",
    "enumerate_connected",
    "enumerate_regular",
    "min_circumference_ht",
    "min_size_ht_nonham",
    "regular_classes",
    "FamilyResult",
    "LayoutFamily",
    "discover_seed",
    "families_for",
    "search_family",
]
