"""Exact graph algorithms parameterized by the independence number.

Thin wrapper around the C++ extension module.
"""

from ._alphaham import (  # noqa: F401
    Graph,
    GuardrailError,
    SizeCapError,
    below_gm,
    brute_alpha,
    brute_ham,
    brute_pc,
    connected_components,
    dissolve,
    gallai_milgram_cover,
    gen_instance,
    hamiltonian_cycle,
    hamiltonian_path,
    induced_subgraph,
    is_c_connected,
    is_clique,
    is_independent_set,
    linkage,
    max_list_tm_embedding,
    menger_fan,
    parse_graph,
    ramsey_extract,
    serialize_graph,
    tcycle,
    verify_certificate,
    vertex_connectivity,
)

__all__ = [
    "Graph",
    "GuardrailError",
    "SizeCapError",
    "below_gm",
    "brute_alpha",
    "brute_ham",
    "brute_pc",
    "connected_components",
    "dissolve",
    "gallai_milgram_cover",
    "gen_instance",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "induced_subgraph",
    "is_c_connected",
    "is_clique",
    "is_independent_set",
    "linkage",
    "max_list_tm_embedding",
    "menger_fan",
    "parse_graph",
    "ramsey_extract",
    "serialize_graph",
    "tcycle",
    "verify_certificate",
    "vertex_connectivity",
]
