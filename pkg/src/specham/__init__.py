"""Spectral conditions for Hamiltonicity of claw-free graphs, checked by computation."""
from .codec import emit_edgelist, emit_graph6, parse_edgelist, parse_graph, parse_graph6
from .extremal import (ExtremalSpec, blow_up_triangle, build_brousek, build_en, build_ep,
                       ep_family)
from .graph import (Graph, combine, complement, complete, connectivity, cycle, empty, path,
                    star)
from .hamilton import HamiltonResult, hamilton, is_hamiltonian, is_traceable
from .spectral import largest_eigenvalue, q_index, spectral_radius, spectral_report
from .structure import (closure, clique_number, eligible_vertices, find_induced, is_claw_free,
                        is_closed, is_isomorphic, local_completion)
from .theorems import TheoremId, TheoremVerdict, check

__all__ = [
    "Graph", "combine", "complement", "complete", "connectivity", "cycle", "empty", "path",
    "star", "emit_edgelist", "emit_graph6", "parse_edgelist", "parse_graph", "parse_graph6",
    "largest_eigenvalue", "q_index", "spectral_radius", "spectral_report", "closure",
    "clique_number", "eligible_vertices", "find_induced", "is_claw_free", "is_closed",
    "is_isomorphic", "local_completion", "HamiltonResult", "hamilton", "is_hamiltonian",
    "is_traceable", "ExtremalSpec", "blow_up_triangle", "build_brousek", "build_en",
    "build_ep", "ep_family", "TheoremId", "TheoremVerdict", "check",
]
