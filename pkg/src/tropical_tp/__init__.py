"""Tropical total positivity: classification, planar-network parametrization,
Jacobi factorization and a Puiseux-series valuation check."""

from .core import (
    BRUTE_LIMIT,
    NEG_INF,
    Permutation,
    RequiresFiniteError,
    ShapeError,
    TooLargeError,
    TropMatrix,
    TropSign,
    minor_sign,
    oplus,
    optimal_permutations,
    otimes,
    to_scalar,
    trop_matmul,
    trop_permanent,
)
from .jacobi import (
    Letter,
    NotTPError,
    Word,
    canonical_word,
    commutation_map,
    evaluate_word,
    jacobi_matrix,
    recover_params,
    validate_scheme,
    weight_sequence,
)
from .network import (
    PlanarNetwork,
    WeightMatrix,
    build_canonical,
    count_optimal_paths,
    inequality_report,
    is_totally_connected,
    normalize_path,
    transfer_matrix,
    uppermost_path,
    uppermost_weight,
)
from .parametrization import gen_matrix, gen_weights, phi, psi
from .positivity import PositivityClass, adjacent_2x2_check, classify_oracle, is_tn_finite, is_tp
from .puiseux import PuiseuxPoly, k_det, k_transfer, k_val, t_power, val_correspondence_check

__version__ = "0.1.0"
