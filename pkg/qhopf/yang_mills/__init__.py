from .fields import (
    CANONICAL,
    SOLUTION_FAMILIES,
    Displacement,
    YMSMTriple,
    matter_potential,
    recovered_winding,
)
from .probes import PROBE_LENGTH, probe_family
from .equations import (
    calibrate_gauge_constant,
    find_primitive,
    gauge_constant_law,
    gauge_scan,
    gauge_terms,
    is_yang_mills,
    max_abs,
    ym_residual,
    ym_variation,
    ymsm_gauge_residual,
    ymsm_matter_residual,
)
from .report import ym_check
