"""chorkit: exact chordality, decompositions, colorings, and the reduction.

The package computes graph chordality exactly at desk scale, constructs and
verifies the equivalent certificate forms (chordal-completion families,
non-edge-separating tree-decomposition families, complete median
decompositions over tree products), runs two coloring pipelines for
intersections of chordal graphs, and translates coloring questions into
chordality questions by doubling vertices.
"""

from .chordal import (
    ChordalWitness,
    IntervalResult,
    NotChordalError,
    Triangulation,
    TriangulationEnumeration,
    clique_tree,
    find_hole,
    is_chordal,
    mcs_order,
    minimal_triangulations,
    peo_coloring,
    peo_violation,
    recognize_chordal,
    recognize_interval,
)
from .coloring import (
    CellPartition,
    PathLayers,
    RadiusClasses,
    color_via_pw,
    color_via_radius,
    peel_paths,
    pw_partition,
    radius_partition,
    subtree_level,
)
from .decomposition import (
    OrthogonalityReport,
    Tree,
    TreeDecomposition,
    completion_of,
    is_complete,
    is_path_decomposition,
    is_separating_family,
    orthogonality,
    peel_path_of,
    separated_nonedges,
    tree_pathwidth,
    tree_radius,
    verify_td,
    width,
)
from .engine import (
    ChordalityCertificate,
    ChordalityResult,
    SearchBudget,
    certificate_to_td_family,
    chordality_exact,
    chordality_upper_via_coloring,
    td_family_to_certificate,
    verify_certificate,
)
from .graphs import (
    BudgetExceededError,
    CliqueReport,
    Coloring,
    Graph,
    GraphInputError,
    InternalInvariantError,
    Verdict,
    complement,
    coloring_violation,
    graph_intersection,
    induced_subgraph,
    maximal_cliques,
    non_edges,
)
from .median import (
    GeodesicInterval,
    MedianDecomposition,
    TreeProduct,
    build_ktmd,
    factors_are_paths,
    interval,
    is_convex,
    median3,
    product_distance,
    verify_complete_ktmd,
)
from .reduction import (
    LexProduct,
    chromatic_number_exact,
    coloring_to_chordality_instance,
    decode_coloring,
    is_k_colorable,
    lex_product,
    lift_base_coloring,
)

__version__ = "0.1.0"
