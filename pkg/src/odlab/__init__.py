"""Exact desk-scale toolkit for orthogonality dimension, minrank, line
digraphs, subspace graphs, and index coding, with machine-checkable
witnesses."""

from .algebraic import (
    OrthRep,
    ReprMatrix,
    build_O,
    build_Oprime,
    minrank,
    orthogonality_dimension,
    verify_orth_rep,
    verify_repr_matrix,
)
from .coloring import (
    Coloring,
    b,
    chromatic_number,
    find_k_coloring,
    inverse_b,
    lift_coloring_to_line,
    set_coloring_from_line,
    verify_coloring,
)
from .errors import BudgetExceeded, GuardExceeded, WitnessError
from .gf import (
    FieldSpec,
    GfMatrix,
    GfVector,
    Subspace,
    enumerate_subspaces,
    find_nonisotropic,
    gaussian_binomial,
    inner_product,
    rank,
)
from .graphs import (
    ArcVertex,
    Digraph,
    Graph,
    complement,
    line_digraph,
    parse_graph,
    serialize_graph,
    underlying_graph,
)
from .homomorphism import find_homomorphism, is_homomorphism
from .index_coding import (
    IndexCode,
    coloring_from_index_code,
    line_coloring_from_index_code,
    linear_code_from_matrix,
    optimal_index_code_bruteforce,
    verify_index_code,
)
from .realdim import (
    RealSubspace,
    RoundedColor,
    double_shift_graph,
    random_adjacent_S_pair,
    sign_coloring,
    subspace_color,
)
from .reduction import ReductionOutput, check_witnesses, paper_report, reduce_graph
from .subspaces import (
    build_S,
    build_Sprime,
    canonical_clique_S,
    clique_number,
    hom_line_to_subspace_pairs,
    hom_line_to_subspaces,
    hom_subspace_pairs_to_line,
    hom_subspaces_to_line,
)

__version__ = "0.1.0"
