"""Univalent functions with negative coefficients under a composed m-hypergeometric operator."""

from .classify import (
    STARLIKE,
    ClassParams,
    ExtremeDecomposition,
    MembershipReport,
    coefficient_bound,
    extremal_function,
    extreme_point_decompose,
    inclusion_compare,
    multiplier,
    reconstruct_from_extreme_points,
    theorem1_test,
)
from .functions import (
    TFunction,
    convex_combination,
    evaluate,
    evaluate_derivative,
    hadamard,
    identity,
    make_t_function,
)
from .geometry import (
    DistortionEnvelope,
    coeff_sum_bound,
    distortion_envelope,
    hadamard_mu2,
    hadamard_mu2_oracle,
    neighborhood_distance,
    theorem6_radius,
    theorem7_zeta,
)
from .operators import (
    OperatorParams,
    OperatorWeights,
    alpha_integral,
    apply_operator,
    bernardi_integral,
    lambda_weights,
    sa_weight,
)
from .qseries import SeriesParams, hurwitz_lerch_partial, q_gamma, q_pochhammer, t_psi_r
from .verify import SampleGrid, SampleReport, condition_expression, crosscheck, disk_sample_condition

__version__ = "0.1.0"
