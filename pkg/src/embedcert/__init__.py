"""Certificates of non-embeddability for simplicial complexes.

Z2 homology, girth and m-complete bases of top homology, integral torsion,
and exact face-number inequalities for PL embeddings into R^{d+1} and R^d.
"""

__version__ = "0.1.0"

from ._backend import kernels as _kernels
from .complex import (
    InputError,
    RidgeRegularity,
    SimplicialComplex,
    barycentric_subdivision,
    cone,
    format_facets,
    from_facets,
    join,
    parse_facets,
    read_facets,
    suspension,
)
from .cycles import (
    BudgetExceeded,
    CycleCertificate,
    Decision,
    SearchBudget,
    counting_refutation,
    girth,
    m_complete_basis,
    min_weight_cycle,
)
from .generators import generate, parse_gen_spec
from .homology import (
    betti_vector,
    betti_z2,
    boundary_matrix,
    homology_profile,
    integral_torsion,
    morse_quantities,
    skeleton_identity,
    torsion_obstruction,
)
from .obstruction import Target, Verdict, battery, skeleton_of_manifold

BACKEND = _kernels.NAME

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "CycleCertificate",
    "Decision",
    "InputError",
    "RidgeRegularity",
    "SearchBudget",
    "SimplicialComplex",
    "Target",
    "Verdict",
    "barycentric_subdivision",
    "battery",
    "betti_vector",
    "betti_z2",
    "boundary_matrix",
    "cone",
    "counting_refutation",
    "format_facets",
    "from_facets",
    "generate",
    "girth",
    "homology_profile",
    "integral_torsion",
    "join",
    "m_complete_basis",
    "min_weight_cycle",
    "morse_quantities",
    "parse_facets",
    "parse_gen_spec",
    "read_facets",
    "skeleton_identity",
    "skeleton_of_manifold",
    "suspension",
    "torsion_obstruction",
]
