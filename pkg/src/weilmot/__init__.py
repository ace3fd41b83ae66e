"""weilmot: exact arithmetic invariants of zeta functions over finite fields.

Given the degree-wise L-polynomials of a variety over F_q, this package
verifies Weil numbers, computes Newton polygons and slope/coniveau
filtrations, builds Kunneth idempotents, evaluates pole orders (predicted
cycle ranks), and describes the semisimple Q-algebra of correspondences at
the generic point through its Wedderburn blocks and Brauer invariants.
Everything is exact: arbitrary-precision rationals throughout, no floats.
"""

from .endalg import (
    AlgebraDescription,
    CSAData,
    brauer_block,
    compute_A,
    curve_end_algebra,
    honda_tate_dimension,
    orbit_index,
    rank_from_algebra,
    weight1_realization,
    witt_vector_rank,
)
from .errors import (
    BadConstantTerm,
    BaseMismatch,
    CertificationFailed,
    DegreeHintMismatch,
    DimensionTooLarge,
    IndexDivisibilityError,
    KTooLarge,
    NotCoprime,
    NotEffectiveInput,
    NotIrreducible,
    NotMonic,
    NotSquarefree,
    NotWeil,
    OddDegree,
    OddProduct,
    ParseError,
    PrecisionExhausted,
    RangeError,
    ValidationFailed,
    WeightMismatch,
    WeilmotError,
    ZeroConstantTerm,
    ZeroInput,
    ZeroPolynomial,
)
from .exact_arith import (
    Factorization,
    crt_polynomials,
    exterior_charpoly,
    factor_rational_poly,
    reciprocal_transform,
    sturm_count,
    tensor_charpoly,
    to_l_polynomial,
)
from .formats import (
    InputDocument,
    IsogenyRecord,
    Report,
    document_of_zeta,
    ingest_isogeny_file,
    ingest_isogeny_lines,
    parse_document,
    parse_isogeny_record,
    record_to_document,
    serialize_document,
    serialize_isogeny_record,
)
from .motives import (
    GradedComplex,
    Motive,
    ZetaData,
    ZetaReport,
    complex_of,
    graded_hom_dim,
    hom_from_unit,
    k_group_dim,
    kunneth_idempotents,
    motive_of,
    pole_order,
    twisted_weight_part,
    validate_zeta,
    zeta_from_curve,
    zeta_point,
    zeta_product,
)
from .padic import NewtonPolygon, PlaceData, newton_polygon, ord_q, padic_places
from .poly import RationalPolynomial, poly
from .primes import PrimePower
from .weil import (
    TateStructure,
    WeilOrbit,
    coniveau_sub,
    is_effective,
    mth_root_factors,
    slope_filtration_dim,
    tate_twist,
    tate_twist_orbit,
    verify_weil,
    weil_restriction_charpoly,
)

__version__ = "0.1.0"
