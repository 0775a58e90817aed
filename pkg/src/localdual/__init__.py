"""Numerical local dual spaces and local Hilbert data of polynomial ideals."""

__version__ = "0.1.0"

from .dual import (
    DualSpace,
    PolynomialSystem,
    Strategy,
    colon_dual_truncated,
    dual_dimension_profile,
    macaulay_matrix,
    truncated_dual,
    zero_dimensional_dual,
)
from .errors import (
    DimensionError,
    NotStabilizedError,
    NumericalError,
    ParseError,
    PointNotOnVarietyError,
    TooManyGeneratorsError,
)
from .hilbert import (
    HilbertData,
    MonomialIdeal,
    g_corners,
    hilbert_function_of_dual,
    hilbert_series_data,
    local_dimension_and_multiplicity,
    local_hilbert_regularity,
    s_corners,
)
from .numlinalg import numerical_kernel, numerical_rank, span_containment
from .poly import (
    DualFunctional,
    MonomialOrder,
    Polynomial,
    Side,
    compare_monomials,
    contract,
    evaluate_pairing,
    translate_system,
)
from .sysfile import parse_point, parse_system
