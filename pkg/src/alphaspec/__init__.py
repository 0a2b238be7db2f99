"""Spectra, energy and Estrada index of alpha-distance matrices of graphs, with bound checks."""
from .bounds import BOUND_IDS, BoundResult, evaluate_all
from .closed_forms import (complete_spectrum, distinct_eigenvalue_count, star_energy, star_radius,
                           star_spectrum, subset_eigenvalue)
from .formats import ParseError, encode_graph6, parse_edge_list, parse_graph6
from .graphs import (DisconnectedGraphError, DistanceData, Graph, GraphError, all_pairs_distances,
                     generate_family, generate_random_connected, is_connected, is_transmission_regular)
from .linalg import eigenvalues_2x2, frobenius_norm, quotient_matrix, sym_eigenvalues
from .spectra import (Spectrum, alpha_energy, alpha_estrada, alpha_spectrum, build_alpha_matrix,
                      graph_invariants, moment_identities, tree_distance_checks)

__version__ = "0.1.0"
