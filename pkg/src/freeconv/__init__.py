"""Exact free-probability kernel over commutative rings.

Truncated non-commutative power series under boxed convolution, free
cumulants of joint distributions, the one-dimensional lambda layer with
its two products, and the coordinate Hopf algebra with its triangular
matrix model.  All arithmetic is exact: rationals or a prime field.
"""

from .boxconv import (
    box_conv,
    box_inverse,
    cumulants_from_moments,
    free_add,
    free_mul,
    moeb_series,
    moments_from_cumulants,
    semidirect_decompose,
    unit_series,
    zeta_series,
)
from .distributions import (
    CumulantTable,
    JointDistribution,
    cumulants_of,
    free_product,
    hadamard_law_mul,
    is_combinatorially_free,
    law_dirac,
    law_free_poisson,
    law_semicircle,
    m_transform,
    moments_of,
    r_transform,
    tuple_add,
    tuple_mul,
)
from .errors import (
    DomainError,
    FlagConflictError,
    FreeconvError,
    GroupMembershipError,
    NameClashError,
    NotInvertibleError,
    OrderError,
    ParseError,
    QAlgebraError,
    RingMismatchError,
    ShapeMismatchError,
)
from .hopf import (
    GenPolynomial,
    RepMatrix,
    TensorPolynomial,
    antipode,
    coproduct,
    counit,
    evaluate,
    hopf_axiom_check,
    rep_basis,
    verify_s_multiplicativity,
)
from .partitions import NCPartition, enumerate_nc, is_noncrossing, kreweras
from .rings import QQ, RingDescriptor, RingElement, mod_ring
from .series import TruncSeries, all_words
from .witt import (
    LambdaElement,
    OneDimLaw,
    Series1,
    circled_ast,
    circled_ast_unit,
    exp_iso,
    ghost,
    ghost_inverse,
    lambda_mul,
    law_free_add,
    law_free_mul,
    log_iso,
    witt_mul,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "mod_ring",
    "RingDescriptor",
    "RingElement",
    "NCPartition",
    "enumerate_nc",
    "kreweras",
    "is_noncrossing",
    "TruncSeries",
    "all_words",
    "box_conv",
    "box_inverse",
    "unit_series",
    "zeta_series",
    "moeb_series",
    "free_add",
    "free_mul",
    "moments_from_cumulants",
    "cumulants_from_moments",
    "semidirect_decompose",
    "JointDistribution",
    "CumulantTable",
    "cumulants_of",
    "moments_of",
    "m_transform",
    "r_transform",
    "free_product",
    "is_combinatorially_free",
    "tuple_add",
    "tuple_mul",
    "law_dirac",
    "law_semicircle",
    "law_free_poisson",
    "hadamard_law_mul",
    "Series1",
    "LambdaElement",
    "OneDimLaw",
    "ghost",
    "ghost_inverse",
    "lambda_mul",
    "witt_mul",
    "log_iso",
    "exp_iso",
    "circled_ast",
    "circled_ast_unit",
    "law_free_add",
    "law_free_mul",
    "GenPolynomial",
    "TensorPolynomial",
    "RepMatrix",
    "coproduct",
    "counit",
    "antipode",
    "evaluate",
    "hopf_axiom_check",
    "rep_basis",
    "verify_s_multiplicativity",
    "FreeconvError",
    "DomainError",
    "OrderError",
    "ParseError",
    "RingMismatchError",
    "ShapeMismatchError",
    "NotInvertibleError",
    "GroupMembershipError",
    "NameClashError",
    "QAlgebraError",
    "FlagConflictError",
]
