"""Exact verification of nonvanishing minors of prime-order Fourier matrices.

The package computes, in exact arithmetic, whether square submatrices of
the order-p Fourier matrix have zero determinant — over the complex
cyclotomic field, over its real cosine subfield, and over finite fields
F_{q^r} containing an order-p root of unity — and derives the explicit
characteristic bounds that make every minor nonzero.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    TableRow,
    bound_new,
    compute_bound,
    first_admissible_prime,
    gamma_zhang,
    reproduce_table,
)
from .cyclo_factor import (
    CosetTable,
    FieldSetup,
    TraceTable,
    build_field,
    coset_table,
    factor_cyclotomic,
    is_prime,
    mult_order,
    trace_table,
)
from .identities import (
    IdentitySweep,
    frobenius_orbit_sum_check,
    residue_certificate,
    substitution_orbit_sum_check,
    sweep_identities,
)
from .minors import (
    MinorReport,
    det_over_field,
    fourier_matrix,
    fourier_submatrix,
    minor_vanishes,
    uncertainty_min,
    verify_all_minors,
)
from .real_cheb import (
    CosineField,
    chebyshev_identity_check,
    cosine_minpoly,
    phi_sequence,
    verify_dct_minors,
    verify_real_minors,
)
from .schur import (
    SchurSpec,
    WorkBudgetError,
    jacobi_trudi_spec,
    m_count,
    partition_of,
    schur_eval_ones,
    spec_from_ssyt,
    spec_vector,
)

__all__ = [
    "__version__",
    "BoundReport",
    "CosetTable",
    "CosineField",
    "FieldSetup",
    "IdentitySweep",
    "MinorReport",
    "SchurSpec",
    "TableRow",
    "TraceTable",
    "WorkBudgetError",
    "bound_new",
    "build_field",
    "chebyshev_identity_check",
    "compute_bound",
    "coset_table",
    "cosine_minpoly",
    "det_over_field",
    "factor_cyclotomic",
    "first_admissible_prime",
    "fourier_matrix",
    "fourier_submatrix",
    "frobenius_orbit_sum_check",
    "gamma_zhang",
    "is_prime",
    "jacobi_trudi_spec",
    "m_count",
    "minor_vanishes",
    "mult_order",
    "partition_of",
    "phi_sequence",
    "reproduce_table",
    "residue_certificate",
    "schur_eval_ones",
    "spec_from_ssyt",
    "spec_vector",
    "substitution_orbit_sum_check",
    "sweep_identities",
    "trace_table",
    "uncertainty_min",
    "verify_all_minors",
    "verify_dct_minors",
    "verify_real_minors",
]
