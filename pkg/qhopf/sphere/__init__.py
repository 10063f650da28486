from .forms import GRADES, BaseForm
from .geometry import (
    base_d,
    codifferential_left,
    codifferential_right,
    form_star,
    global_inner,
    hodge_left,
    hodge_right,
    integral,
    laplacian0,
    metric,
    wedge,
)
from .conventions import (
    ETA_STAR_CONVENTIONS,
    LAPLACIAN_ANCHOR,
    ConventionReport,
    SphereConventions,
    calibrate,
    convention_report,
    get_conventions,
    solve_kappa,
)
