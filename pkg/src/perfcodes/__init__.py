"""Perfect binary codes: Hamming and Vasiliev constructions, Steiner triple
systems, and checks of homogeneity and transitivity."""

from .core import (
    Code,
    CodeStats,
    EchelonBasis,
    ExplicitCode,
    LinearCode,
    check_perfect,
    code_stats,
    coset_representatives,
    hamming,
    hamming7_paper,
    is_perfect,
    kernel,
    min_distance,
    rank,
    span,
    support,
    weight,
    weight_distribution,
    word,
)
from .groups import (
    is_homogeneous,
    is_transitive,
    order_identity_check,
    rot_z_brute,
    rot_z_criterion,
    sym_group,
    transitivity_reduction,
)
from .named import named_code, named_lambda
from .perm import Permutation, duplicator, tau
from .reports import Report, validate_report
from .sts import (
    SteinerTripleSystem,
    ThetaFn,
    am_doubling,
    are_isomorphic,
    fano,
    neighborhood_sts,
    theta_from_lambda,
)
from .vasiliev import (
    ExplicitLambda,
    LambdaFn,
    VasilievCode,
    ZeroLambda,
    lambda_lift,
    vasiliev_construct,
)

__version__ = "0.1.0"
