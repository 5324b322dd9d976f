from .graph import CayleyGraph, cayley_graph, graph_from_moves, from_edges, from_networkx, read_edge_list, write_edge_list
from .spectrum import (
    UNIFORM_BOUND,
    SpectralReport,
    TrivialEigen,
    IterativeExtremes,
    ramanujan_bound,
    degree_d_bound,
    trivial_values,
    full_spectrum_dense,
    lambda_extremes_iterative,
    trivial_eigendata,
    lambda_nontrivial,
    analyze,
)
from .expansion import vertex_expansion_bruteforce, edge_expansion_bruteforce, cheeger_bounds, expansion_summary
from .mixing import mixing_tv, mixing_bound, mixing_time_bound
from .error import (
    NotGeneratingError,
    DuplicateGeneratorError,
    DenseCapExceededError,
    IterativeConvergenceError,
    SpectrumRangeError,
    MissingTrivialEigenvalueError,
    ExpansionSizeError,
    InvariantViolation,
)
