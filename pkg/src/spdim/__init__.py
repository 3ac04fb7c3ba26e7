"""spdim: dimensions, formal characters and highest weights of a family of
simple symplectic-group modules in characteristic p, computed by independent
cross-checking routes (coloring combinatorics, trigonometric sums, tabulated
polynomials, Weyl dimensions)."""

from .errors import (
    BadParameters,
    EmptyModule,
    InsufficientPoints,
    ListCapExceeded,
    NonIntegralResult,
    NoSuchFormula,
    NotDominant,
    NoUniqueMaximum,
    ParityViolation,
    PrecisionExhausted,
    RankMismatch,
    SpdimError,
    WeightUndefined,
)
from .lollipop import (
    LollipopColoring,
    TrunkLayout,
    count_colorings,
    enumerate_colorings,
    trunk_layout,
    type_of,
    validate,
    vertex_triples,
    weight_of,
)
from .modules import (
    ConsistencyReport,
    ModuleDescriptor,
    WeightMultiset,
    case_label,
    character,
    character_from_enumeration,
    consistency_report,
    dim,
    family_table,
    highest_weight_closed,
    highest_weight_from_character,
    reduced_character,
)
from .verlinde import (
    RationalPolynomial,
    TrigEvalConfig,
    appendix_b_eval,
    appendix_b_polynomial,
    default_config,
    dim_formula,
    interpolate_dim,
    verlinde_D,
    verlinde_delta,
)
from .weights import (
    DominantWeight,
    ReducedWeight,
    Weight,
    alcove_pairing,
    dominance_leq,
    dominant_representative,
    epsilon_to_omega,
    omega_to_epsilon,
    orbit_size,
    reduce_weight,
    rho,
    symmetric_lift,
    weyl_orbit,
)
from .weyl import jantzen_rank3_dim, weyl_dim

__version__ = "0.1.0"
