"""Exact graph inertia and the inertial lower bound for the chromatic number."""

from .bounds import (
    BoundUndefined,
    chif_nonsingular_bound,
    hoffman_bound,
    hoffman_full_chi,
    inertia_cap_check,
    inertial_bound,
)
from .chromatic import (
    BudgetExceeded,
    chromatic_number,
    fractional_chromatic,
    fractional_coloring,
    independence_number,
    maximal_independent_sets,
)
from .graph import (
    Graph,
    complement,
    disjoint_union,
    encode_graph6,
    gen_barbell,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_empty,
    gen_generalized_petersen,
    gen_kneser,
    gen_path,
    graph_from_edges,
    parse_graph6,
)
from .inertia import (
    Inertia,
    IntPolynomial,
    RationalSymMatrix,
    Spectrum,
    char_poly,
    inertia,
    inertia_from_charpoly,
    inertia_weighted,
    numeric_spectrum,
)
from .srg import (
    SrgParams,
    conjecture2_bound,
    mu2one_predicted_nplus,
    srg_chif_lower,
    srg_complement_params,
    srg_inertia,
    srg_multiplicities,
    taylor_nplus,
)

__version__ = "0.1.0"
