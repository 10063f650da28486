from .generators import GeneratorReport, GeneratorSet, generator_set, verify_generators
from .covariant import (
    SIDES,
    BundleForm,
    Section,
    check_side,
    coupling_left,
    coupling_right,
    form_inner,
    nabla,
    nabla_left,
    nabla_right,
    section_inner,
)
from .tables import (
    ROWS,
    TableEntry,
    classical_value,
    classify_row,
    lambda_hat_mkl,
    lambda_hat_neg_mkl,
    lambda_mkl,
    lambda_neg_mkl,
    row5_growth_decomposition,
    table_entry,
)
from .spectral import (
    DEFAULT_BUFFER,
    LEADING_COEFFICIENTS,
    ChainMatrix,
    Eigenpair,
    LaplacianOperator,
    SpectralBlock,
    block_spectrum,
    buffered_chain,
    chain_key,
    chain_matrix,
    classical_limit,
    closed_form_laplacian,
    laplacian_matrix,
    load_block,
    spectrum,
    spectrum_rows,
)
from .analysis import (
    CommutationReport,
    CompletenessReport,
    GrowthReport,
    affine_relation_residual,
    basis_completeness,
    commutation_witness,
    growth_scan,
    sphere_laplacian_residual,
    star_symmetry_residual,
    witness,
)
