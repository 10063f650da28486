from .forms import (
    BASIS_NAMES,
    ETA_MINUS,
    ETA_PLUS,
    ETA_ZERO,
    ZERO_FORM,
    InvariantForm,
    TotalForm1,
)
from .germs import (
    BASIS_CHOICE,
    DEFAULT_LEVEL,
    IDEAL_GENERATORS,
    GermQuotient,
    GermsData,
    adjoint_germ,
    build_germs_data,
    circ,
    germ_quotient,
    germs,
    germs_by_quotient,
    get_germs_data,
    lambda_functionals,
)
from .derivatives import (
    character,
    commutator_scalar,
    differential,
    differential_by_coproduct,
    eta_times,
    horizontal,
    horizontal_derivative,
    partial_bar_minus,
    partial_bar_plus,
    partial_minus,
    partial_plus,
    partial_zero,
    twist,
)
from .circle import CircleCalculus, g_closed_form, get_circle_calculus
from .connection import (
    CURVATURE_COEFFICIENT,
    CanonicalConnection,
    calibrate_connection,
    canonical_curvature,
    curvature,
    curvature_on_section,
    get_canonical_connection,
    qpc_constraint_residual,
    regular_qpc_solver,
)
