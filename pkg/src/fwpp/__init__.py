"""Exact enumeration of squared Markov equations, fake weighted projective
planes of integral degree, their singularities and adjacency graphs."""

from .abelian import (
    KAutomorphism,
    KContext,
    KElement,
    apply_automorphism,
    automorphisms,
    cokernel_structure,
    hermite_normal_form,
    k_membership_multiple,
    kernel_basis,
    smith_normal_form,
)
from .adjacency import (
    AdjacencyGraph,
    AdjacentPair,
    KStarData,
    adjacency_graph,
    adjacency_neighbors,
    adjacent_partner,
    assemble_3x4,
    can_degenerate,
    kstar_degree,
    self_adjacency_census,
    slice_matrices,
)
from .markov import (
    EnumerationCapExceeded,
    MutationTree,
    SolutionTriple,
    SquareDecomposition,
    decompose,
    enumerate_tree,
    initial_solutions,
    is_initial,
    is_solution,
    mutate,
    one_step_mutations,
    scaled_solution_class,
)
from .planes import (
    ClassifiedPlane,
    DegreeMatrix,
    GeneratorMatrix,
    SeriesId,
    SingularityReport,
    adjust,
    anticanonical_class,
    classify,
    cone_gorenstein_index,
    corresponds,
    degree,
    fake_weights_of_degree_matrix,
    fake_weights_of_generator,
    generator_of,
    is_isomorphic,
    is_t_singular,
    isomorphism_witness,
    local_class_group_order,
    local_gorenstein_index,
    resolution_curve_count,
    series_id,
    singularity_report,
    t_singular_chart,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
