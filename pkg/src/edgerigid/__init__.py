"""Edge-rigidity and conformal rigidity of graphs.

Exact integer deciders for edge-rigidity, walk-regularity classification,
spectral embeddings, and certified optimization of extreme Laplacian
eigenvalue sums over the edge-weight simplex.
"""

from .errors import (
    BudgetExceededError,
    ConvergenceFailureError,
    DimensionMismatchError,
    DisconnectedError,
    DisconnectingWeightsError,
    EdgeRigidError,
    InternalInconsistencyError,
    LengthMismatchError,
    NotSimpleError,
    ParseError,
    TooSmallError,
)
from .graphs import (
    Graph,
    Orientation,
    WeightVector,
    adjoint_apply,
    bipartition,
    degree_classification,
    graph6_bytes,
    incidence,
    laplacian,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    signed_line_graph,
)
from .exactmat import IntPolynomial, adjugate_quadratic_form, char_poly, mat_pow_stream
from .rigidity import (
    RigidityReport,
    cospectrality_classes,
    decide_edge_rigid_exact,
    full_report,
    signed_line_graph_walk_regular,
    walk_class,
)
from .spectral import (
    Spectrum,
    edge_isometry_check,
    effective_resistances,
    embedding,
    kirchhoff_index,
    majorization_check,
    spectrum,
    tree_count_exact,
    weighted_tree_count,
)
from .eigensum import (
    KCertificate,
    KyFanValue,
    OptimizeResult,
    certificate,
    gauge_product,
    k_rigidity_profile,
    kyfan,
    optimize,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ConvergenceFailureError",
    "DimensionMismatchError",
    "DisconnectedError",
    "DisconnectingWeightsError",
    "EdgeRigidError",
    "Graph",
    "IntPolynomial",
    "InternalInconsistencyError",
    "KCertificate",
    "KyFanValue",
    "LengthMismatchError",
    "NotSimpleError",
    "OptimizeResult",
    "Orientation",
    "ParseError",
    "RigidityReport",
    "Spectrum",
    "TooSmallError",
    "WeightVector",
    "adjoint_apply",
    "adjugate_quadratic_form",
    "bipartition",
    "certificate",
    "char_poly",
    "cospectrality_classes",
    "decide_edge_rigid_exact",
    "degree_classification",
    "edge_isometry_check",
    "effective_resistances",
    "embedding",
    "full_report",
    "gauge_product",
    "graph6_bytes",
    "incidence",
    "k_rigidity_profile",
    "kirchhoff_index",
    "kyfan",
    "laplacian",
    "majorization_check",
    "mat_pow_stream",
    "optimize",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "signed_line_graph",
    "signed_line_graph_walk_regular",
    "spectrum",
    "tree_count_exact",
    "walk_class",
    "weighted_tree_count",
]
