"""Topological characterisation of link graphs.

Degree distribution, degree correlation, rich-club connectivity and
triangle statistics for web-site link graphs and comparison networks,
plus baseline generators and cross-network curve averaging / fitting.
"""

__version__ = "0.1.0"

from .aggregate import (
    REFERENCE_FIT,
    CurveCollection,
    QuadraticLogFit,
    average_curves,
    compare_to_reference,
    estimate_powerlaw_exponent,
    eval_reference,
    fit_quadratic_loglog,
)
from .connectivity import (
    JointDegreeDistribution,
    NetworkSummary,
    assortative_coefficient,
    degree_distribution,
    joint_degree_distribution,
    knn_curve,
    network_summary,
    rich_club_coefficient,
    rich_club_curve,
)
from .curve import MetricCurve
from .errors import (
    EdgeListFormatError,
    EmptyNetworkError,
    FitError,
    NoLinksError,
    ParameterError,
    TopologyError,
)
from .generators import BaParams, ErParams, generate_ba, generate_er
from .graph import (
    DirectedGraph,
    UndirectedGraph,
    build_directed,
    build_undirected,
    degree,
    in_degree,
    out_degree,
    to_undirected,
)
from .triangles import (
    c_of_k_curve,
    clustering_coefficients,
    delta_of_k_curve,
    directed_triangle_coefficients,
    triangle_ccdf,
    triangle_coefficients,
)
