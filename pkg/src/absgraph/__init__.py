"""Spectra, energies and bound verification for the atom-bond
sum-connectivity (ABS) matrix of graphs, plus a boiling-point /
pi-electron-energy regression on benzenoid hydrocarbons."""

from ._kernels import BACKEND
from .graph import (
    Graph, GraphFamily, analyze_structure, disjoint_union, enumerate_connected,
    from_edge_list, generate, parse_graph6, petersen, write_graph6,
)
from .spectral import (
    IndexKind, Spectrum, WeightKind, build_weighted_matrix, distinct_eigenvalues,
    edge_weight, eigenvalues_symmetric, graph_energy, is_symmetric_about_origin,
    row_sums, spectral_radius, topological_index,
)

__version__ = "0.1.0"
