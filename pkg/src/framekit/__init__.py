"""framekit: finite frames, erasure-compensating duals, full spark tools.

The library covers four connected capabilities:

* frame calculus: analysis/synthesis, frame operator and bounds,
  canonical and general duals, Parseval tests;
* erasure compensation: minimal-redundancy criteria and dual frames that
  vanish on the erased coefficient positions, by four interchangeable
  algorithms;
* spark diagnostics: m-robustness, brute-force spark, and the generator
  correspondence for full spark frames, fed by totally positive integer
  matrices built from seed sequences;
* Parseval conversion: inverse square root of the frame operator, the
  cheaper iterative rank-one correction, and rotations producing
  1-robust Parseval frames.
"""

from .errors import (
    BadIndexSet,
    BadSeeds,
    DimensionMismatch,
    FirstBlockNotOrthonormal,
    FramekitError,
    GeneratorNotTotallyNonsingular,
    IntegerOverflow,
    IntegralityBroken,
    IsOrthonormalBasis,
    MrcViolated,
    NoPartner,
    NonFiniteInput,
    NotADual,
    NotAFrame,
    NotCanonicalOrder,
    NotFullSpark,
    NotHermitian,
    NotInvertible,
    NotParseval,
    NotPositiveDefinite,
    PrefixNotInvertible,
    SingularMatrix,
    TooManySubsets,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    hermitian_inv_sqrt,
    inner,
    minor_det,
    numeric_rank,
    rank_one,
    solve_linear,
)
from .frames import (
    DualFrame,
    Frame,
    VectorFamily,
    analysis,
    canonical_dual,
    cross_gramian,
    frame_bounds,
    frame_operator,
    is_dual_pair,
    is_parseval,
    synthesis,
)
from .erasures import (
    ALGORITHMS,
    CompensatingDual,
    ErasureSet,
    chain_inverse,
    closed_form_inverse,
    compensating_dual,
    compensating_dual_operator,
    compensating_dual_system,
    mrc_by_gramian,
    mrc_by_operator,
    mrc_by_span,
    mrc_witness,
    rank_one_inverse,
    reconstruct,
    single_erasure_dual,
)
from .spark import (
    GeneratorMatrix,
    SparkReport,
    full_spark_from_generator,
    generator_from_full_spark,
    is_m_robust,
    norm_criterion_single,
    parseval_1robust,
    spark,
)
from .totally_positive import (
    SeedSequences,
    TPMatrix,
    build_tp,
    is_totally_nonsingular,
    is_totally_positive,
    pascal,
)
from .parsevalize import (
    CorrectionOperator,
    associated_parseval,
    correction_operator,
    inv_sqrt_rank_one,
    make_1_robust,
    orthobasis_extension_parseval,
    paulsen_rotation,
)

__version__ = "0.1.0"
