"""Exact verification and construction of Hom-Novikov-Poisson algebras.

Algebras are given by rational structure constants in a fixed basis.  The
package decides the defining identities with witnesses (:mod:`hnpkit.checks`),
builds new algebras from old (:mod:`hnpkit.constructions`), supplies concrete
families (:mod:`hnpkit.fixtures`) and runs a seeded theorem suite
(:mod:`hnpkit.suite`).
"""

from .checks import (
    CheckReport,
    check_commutative,
    check_derivation,
    check_hnp,
    check_hom_associative,
    check_hom_lie,
    check_hom_novikov,
    check_hom_poisson,
    check_morphism,
    check_multiplicative,
    check_rightmult_equivalence,
    check_weak_morphism,
)
from .constructions import (
    HypothesisError,
    commutator_minus,
    derivation_perturbation,
    exp_nilpotent,
    fixed_points,
    from_derivation,
    is_admissible,
    nth_twist,
    perturb_combined,
    perturb_diamond,
    perturb_times,
    tensor_product,
    yau_twist,
)
from .core import (
    DoubleHomAlgebra,
    HomAlgebra,
    Identity,
    Witness,
    commutator_op,
    hom_associator,
    left_hom_associator,
    mixed_hom_associator,
    opposite_op,
)
from .linalg import (
    BilinearOp,
    DimensionMismatch,
    LinearMap,
    Rational,
    Vector,
    basis_vector,
    bilinear_eval,
    bilinear_postcompose,
    bilinear_precompose,
    identity_map,
    linmap_compose,
    linmap_pow,
    linmap_tensor,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "check_commutative",
    "check_derivation",
    "check_hnp",
    "check_hom_associative",
    "check_hom_lie",
    "check_hom_novikov",
    "check_hom_poisson",
    "check_morphism",
    "check_multiplicative",
    "check_rightmult_equivalence",
    "check_weak_morphism",
    "HypothesisError",
    "commutator_minus",
    "derivation_perturbation",
    "exp_nilpotent",
    "fixed_points",
    "from_derivation",
    "is_admissible",
    "nth_twist",
    "perturb_combined",
    "perturb_diamond",
    "perturb_times",
    "tensor_product",
    "yau_twist",
    "DoubleHomAlgebra",
    "HomAlgebra",
    "Identity",
    "Witness",
    "commutator_op",
    "hom_associator",
    "left_hom_associator",
    "mixed_hom_associator",
    "opposite_op",
    "BilinearOp",
    "DimensionMismatch",
    "LinearMap",
    "Rational",
    "Vector",
    "basis_vector",
    "bilinear_eval",
    "bilinear_postcompose",
    "bilinear_precompose",
    "identity_map",
    "linmap_compose",
    "linmap_pow",
    "linmap_tensor",
]
