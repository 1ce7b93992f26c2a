"""Exact verification of loop, bialgebra and braided-module identities."""

from .bialgebra import Bialgebra, LinMap, bialgebra_report, dualize, loop_algebra
from .errors import (
    BaseMismatch,
    DimensionMismatch,
    FormatError,
    HopfloopError,
    IndexOutOfRange,
    MorphismInvalid,
    NoAntipodeExtractable,
    NoIdentity,
    NotAGroup,
    NotALoop,
    NotBijective,
    NotIPLoop,
    NotInvertible,
    PreconditionViolated,
)
from .exactmat import RATIONALS, Fp, Matrix, PrimeField, RationalField, field_from_name, invert, kron, rank, solve
from .hopfchecks import (
    EquivalenceReport,
    GaloisReport,
    ScanReport,
    antipode_extract,
    check_antipode_axioms,
    check_galois_compat,
    check_hqg_identity,
    closed_form_galois_inverse,
    convolution_unit,
    convolve,
    equivalence_report,
    galois_matrix,
    invert_galois,
    lr_convolution_invertible,
)
from .loops import (
    CayleyTable,
    LoopReport,
    analyze_loop,
    chein_double,
    check_loop_identity,
    check_quasigroup,
    loop_automorphisms,
    parse_cayley,
    set_galois_bijective,
    table_from_rows,
)
from .ydq import (
    GPair,
    HqgAutomorphism,
    YDMorphism,
    YDQModule,
    adjoint_module,
    automorphism_from_matrix,
    automorphism_from_perm,
    bicomodule_coactions,
    braiding,
    build_H_alpha_beta,
    check_ab_flexible,
    check_automorphism,
    check_braiding_axioms,
    check_crossed_structure,
    check_yd_morphism,
    check_ydq,
    conjugate_ydq,
    gpair_identity,
    gpair_inv,
    gpair_mul,
    identity_automorphism,
    tensor_ydq,
    trivial_module,
    validate_ydq,
    yd_morphism,
)

__version__ = "0.1.0"
