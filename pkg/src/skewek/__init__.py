"""Minimal free resolutions of stable monomial ideals in skew polynomial rings.

The ring is k_q[x_1..x_n] with x_i x_j = q_ij x_j x_i.  For a stable
monomial ideal the resolution is carried by admissible symbols e(sigma;u);
this package builds it exactly (symbolic q coefficients), multiplies on it,
and certifies minimality and exactness.
"""

from .commutation import (
    CommutationMatrix,
    FieldSpecialization,
    Scalar,
    bichar_c,
    chi,
    q_power,
    reorder_oracle,
    specialize,
)
from .dg import (
    check_associativity,
    check_augmentation,
    check_color_commutativity,
    check_leibniz,
    check_odd_squares,
    inv_count,
    module_product,
    multiplication_table,
    product,
    product_in_ambient,
)
from .errors import (
    DimensionError,
    InternalInvariantError,
    LaurentError,
    NotInIdealError,
    NotStableError,
    SkewekError,
    SpecializationError,
    UnitIdealError,
    UnitMonomialError,
)
from .families import (
    power_betti,
    power_of_maximal_ideal,
    random_stable_ideal,
    s_n_betti,
    s_n_ideal,
)
from .homology import ExactnessReport, check_exactness, component_basis
from .ideal import (
    MonomialIdeal,
    contains,
    decompose,
    ideal,
    ideal_from_json,
    ideal_to_json,
    is_stable,
    minimalize,
    monomials_up_to_degree,
    stable_closure,
)
from .invariants import (
    betti_formula,
    betti_from_resolution,
    cm_regularity,
    graded_betti,
    poincare_series,
    projective_dimension,
    tor_regularity,
)
from .monoid import (
    degree,
    divides,
    max_index,
    min_index,
    quotient,
    star,
)
from .resolution import (
    FreeComplex,
    Symbol,
    Term,
    admissible_basis,
    ambient_differential,
    build_resolution,
    check_ambient_square,
    check_quotient_relation,
    differential,
    is_admissible,
    is_minimal,
    verify_complex,
)

__version__ = "0.1.0"
