"""Exact multilinear algebra in the 7-dimensional G2 representation."""
from .forms import (
    INDEX,
    LAMBDA,
    LAMBDA_PUBLISHED,
    NAMES,
    NU_PUBLISHED,
    G2FormSet,
    e,
    edual,
    forms,
    nu_matches_published,
    published_lambda_compatible,
)
from .lie import (
    O0,
    O1,
    O2,
    ORBIT_POINTS,
    P0,
    P1,
    P2,
    ImpossibleState,
    NotOnCG,
    SubspaceBasis,
    bracket,
    i_lambda,
    i_lambda_matrix,
    i_lambda_quotient,
    is_cg_point,
    jacobiator,
    jacobiator_constant,
    jacobiator_identity_check,
    lie_type,
    orbit_type,
    phi_lambda_rank,
    subalgebra_conic,
)
from .multivector import MultiVector, convolve, wedge, wedge_all
from .quadrics import GenericityError, segre_check, segre_conic, segre_quadric, veronese_quadric
from .sampling import sweep

__all__ = [
    "G2FormSet", "GenericityError", "INDEX", "ImpossibleState", "LAMBDA", "LAMBDA_PUBLISHED",
    "MultiVector", "NAMES", "NU_PUBLISHED", "NotOnCG", "O0", "O1", "O2", "ORBIT_POINTS",
    "P0", "P1", "P2", "SubspaceBasis", "bracket", "convolve", "e", "edual", "forms",
    "i_lambda", "i_lambda_matrix", "i_lambda_quotient", "is_cg_point", "jacobiator",
    "jacobiator_constant", "jacobiator_identity_check", "lie_type", "nu_matches_published",
    "orbit_type", "phi_lambda_rank", "published_lambda_compatible", "segre_check",
    "segre_conic", "segre_quadric", "subalgebra_conic", "sweep", "veronese_quadric",
    "wedge", "wedge_all",
]
