"""chowbg: exact additive tables and ring presentations for Chow rings of
classifying spaces of a fixed catalog of algebraic groups, over a
parameterized base field."""

from .cyclic import cyclic_power_codim, cyclic_power_dim, rotation_orbit_summary
from .errors import (
    FieldParseError,
    GradingError,
    GroupParseError,
    UnsupportedError,
)
from .fields import (
    FieldDescriptor,
    GaloisFixedSpec,
    apply_cyclotomic_invariants,
    contains_mu,
    cyclotomic_order,
    galois_fixed_exponent,
    parse_field,
)
from .graded import (
    CODIM,
    Alpha,
    Codim,
    CyclicSummand,
    Dim,
    Gamma,
    Generator,
    GradedAbelianGroup,
    Tensor,
    convert_to_codim,
    degree_orders,
    direct_sum,
    localize,
    mod_p_dimension,
    normalize,
    tensor,
    to_table,
)
from .groups import (
    GroupExpr,
    SylowProfile,
    abelian_invariant_factors,
    abelianization,
    format_group,
    generator_bound,
    group_dimension,
    parse_group_expr,
    sylow_profile,
)
from .models import (
    chow_integral_symmetric,
    chow_model,
    chow_model_localized,
    chow_model_mod_p,
    chow_symmetric_local,
    chow_symmetric_sylow_bound,
    chow_wreath,
    localize_table,
    mod_p_table,
)
from .presentations import (
    RingPresentation,
    additive_table_from_presentation,
    catalog_presentation,
)
from .tables import ChowTable, DegreeRow, Localization

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
