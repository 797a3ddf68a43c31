"""Exact Laplacian and distance-Laplacian spectra of character degree graph families."""

from .closed_forms import (
    Prediction,
    VerificationReport,
    predict,
    predict_cocktail,
    predict_supergraph,
    predict_two_clique,
    verify_family,
)
from .constructors import (
    Family,
    FamilyParams,
    ParameterError,
    admissible_n1,
    cocktail_party,
    complete,
    direct_product_join,
    operation_d,
    supergraph,
    two_clique_cut_vertex,
)
from .graph_core import (
    INF,
    BlockDecomposition,
    DistanceTable,
    Graph,
    GraphError,
    block_decomposition,
    connected_components,
    diameter,
    distances,
    is_connected,
    new_graph,
)
from .spectral import (
    DisconnectedGraphError,
    IntMatrix,
    IntPolynomial,
    Spectrum,
    SpectrumError,
    char_poly,
    distance_laplacian,
    distance_laplacian_spectrum,
    dl_spectrum_via_transfer,
    integer_spectrum,
    laplacian,
    laplacian_spectrum,
    spanning_tree_count,
    spanning_tree_count_from_spectrum,
)
from .validity import CheckReport, CheckResult, Verdict, full_report

__version__ = "0.1.0"
