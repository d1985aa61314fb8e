"""Structured near-Toeplitz tridiagonal matrices: closed-form eigen-pairs
with independent brute-force verification of every claim."""

from .core import (
    DenseMatrix,
    SignPattern,
    TridiagonalMatrix,
    build_E,
    build_K,
    build_R,
    build_S,
    build_Z,
    build_toeplitz,
    flip_conjugate,
    in_pattern_class,
    is_centro_skew,
    is_centro_symmetric,
    matvec,
    sign_pattern,
)
from .errors import (
    DimensionMismatch,
    MatrixFormatError,
    NearToeplitzError,
    OrderTooLarge,
    OrderTooSmall,
    ZeroBandProduct,
    ZeroVector,
)
from .oracle import (
    CharPolyEvaluation,
    SpectrumComparison,
    char_poly_eval,
    rank_small,
    residual,
    spectrum_compare,
)
from .spectra import (
    DUPLICATE_OF_ALL_ONES,
    REGULAR,
    RESIDUAL_TOL,
    EigenPair,
    SpectrumReport,
    general_toeplitz_eigen,
    lift_eigenvector,
    near_toeplitz_eigen,
    normalize_eigenvector,
    skew_toeplitz_eigen,
    spectrum_report,
    symmetric_toeplitz_eigen,
)
from .transforms import (
    ReductionCertificate,
    SymmetrizationCertificate,
    commutator_check,
    diag_symmetrize,
    reduce_R,
    s_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "DenseMatrix",
    "SignPattern",
    "TridiagonalMatrix",
    "sign_pattern",
    "build_E",
    "build_K",
    "build_R",
    "build_S",
    "build_Z",
    "build_toeplitz",
    "flip_conjugate",
    "in_pattern_class",
    "is_centro_skew",
    "is_centro_symmetric",
    "matvec",
    "DimensionMismatch",
    "MatrixFormatError",
    "NearToeplitzError",
    "OrderTooLarge",
    "OrderTooSmall",
    "ZeroBandProduct",
    "ZeroVector",
    "CharPolyEvaluation",
    "SpectrumComparison",
    "char_poly_eval",
    "rank_small",
    "residual",
    "spectrum_compare",
    "DUPLICATE_OF_ALL_ONES",
    "REGULAR",
    "RESIDUAL_TOL",
    "EigenPair",
    "SpectrumReport",
    "general_toeplitz_eigen",
    "lift_eigenvector",
    "near_toeplitz_eigen",
    "normalize_eigenvector",
    "skew_toeplitz_eigen",
    "spectrum_report",
    "symmetric_toeplitz_eigen",
    "ReductionCertificate",
    "SymmetrizationCertificate",
    "commutator_check",
    "diag_symmetrize",
    "reduce_R",
    "s_inverse",
]
