"""Mod-2 cohomology of moduli stacks of real vector bundles on type I Klein surfaces."""

from .f2 import (
    AdaptedBasis,
    BitMatrix,
    adapted_basis,
    dickson_invariant,
    image_basis,
    is_involution,
    kernel_basis,
    normal_form_matrix,
    rank,
    solve,
)
from .klein import (
    CurveInvariants,
    CurveType,
    DerivedInvariants,
    InvariantError,
    classify,
    is_m_curve,
    type1_involution_matrix,
    type2_involution_matrix,
)
from .moduli import (
    ab_inventory,
    cross_check,
    em_column_series,
    rank1_presentation,
    rankr_presentation,
    stack_series,
)
from .series import (
    AlgebraPresentation,
    GeneratorSpec,
    Kind,
    PoincareSeries,
    dim_in_degree,
    product_closed_form,
    series_eq,
    series_mul,
    series_of,
)
from .steenrod import (
    SWMonomial,
    SWPolynomial,
    cup1_height,
    indecomposable_part,
    omega_bso_presentation,
    s_set,
    sq,
    sq1,
    wu_sq_on_generator,
)

__version__ = "0.1.0"
