"""Forgotten topological index of bicyclic graphs: bounds, oracles and audits."""

__version__ = "0.1.0"

from .graph import (Graph, cycle_rank, forgotten_index, forgotten_index_edge_form,
                    is_bicyclic, is_connected, max_degree)
from .histogram import (DegreeHistogram, check_bicyclic_identities, delta_partition,
                        f_from_histogram, histogram_from_graph)
from .io import ParseError, from_graph6, parse_edge_list, to_graph6
from .partition import (CaseParams, NoMajorSequence, ResidueParams, dominant_partition,
                        exact_histogram_max, paper_major_sequence, r_value, residue_params)
from .bounds import AuditRecord, BoundResult, applicable_bound, audit, bound_general_p, bound_p0, bound_p1
from .enumeration import EnumSpec, EnumSummary, enumerate_bicyclic
from .realization import bicyclic_realizable, erdos_gallai, realize
