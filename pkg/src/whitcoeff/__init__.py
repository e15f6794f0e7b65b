"""whitcoeff: degenerate Whittaker coefficients of spherical Eisenstein
series on split simply-laced groups, as exact symbolic expressions, with
Eulerianity verdicts, numeric evaluation, and the supporting
nilpotent-orbit and Whittaker-pair linear algebra."""

from .rootsys import (
    AffineWeight,
    RootSystem,
    RootSystemError,
    WeightVector,
    build_root_system,
    eisenstein_weight,
    highest_root,
    pairing,
)
from .symzeta import (
    AffineArg,
    BFactor,
    CoeffExpr,
    PoleReport,
    TermExpr,
    XiProduct,
    canonicalize,
    evaluate_symbolic,
    same_coefficient,
    term_order_at,
    xi_order_at,
)
from .weyl import (
    CosetTable,
    InfeasibleEnumeration,
    WeylElement,
    act,
    coset_reps_exhaustive,
    coset_reps_levi_pruned,
    inversion_set,
    longest_element,
)
from .reduction import (
    CharacterSupport,
    EisensteinSpec,
    EulerianityVerdict,
    ReductionError,
    SupportError,
    constant_term,
    degenerate_whittaker,
    eulerianity_report,
    intertwiner,
    restricted_parameters,
)
from .numeval import (
    NumericConfig,
    NumericError,
    bessel_k,
    divisor_sigma,
    eval_term,
    xi_num,
    zeta_num,
)
from .orbits import (
    ChevalleyAlgebra,
    GradedSubspace,
    NilpotentOrbit,
    OrbitError,
    WhittakerPair,
    build_algebra,
    closure_covers,
    closure_leq,
    dominance_leq,
    dominates,
    find_orbit,
    grade_by,
    isotropic_dimension_check,
    n_S_phi,
    neutral_pair_for,
    omega_radical,
    orbit_catalog,
    stabilizer_dimension,
)

__version__ = "0.1.0"
