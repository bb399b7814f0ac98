"""Exact connected-dominating-set constructions and clique-minor invariants for small graphs."""

from .graphs import (
    Graph,
    bit_list,
    bits,
    complete_graph,
    cycle_graph,
    empty_graph,
    mask_of,
    path_graph,
)
from .invariants import (
    HypothesisReport,
    clique_number,
    find_claw,
    find_induced_cycle,
    has_independent_set,
    hypothesis_report,
    independence_number,
    is_cds,
    is_simplicial,
    iter_cds,
    max_clique,
    max_independent_set,
    min_cds,
    min_cds_size,
    simplicial_vertices,
)
from .minors import (
    HSequence,
    MinorModel,
    h_number,
    h_sequence_violation,
    hadwiger_number,
    verify_h_sequence,
    verify_minor_model,
)
from .constructive import (
    ALL_TRACE_LABELS,
    CaseGapError,
    CaseTrace,
    ContradictionError,
    PartitionT2,
    PreconditionError,
    build_h_certificate,
    corollary_cds,
    nonadjacent_neighbor_pair,
    partition_t2,
    theorem1_edge,
    theorem2_cds,
)

__version__ = "0.1.0"
