"""J-ternary algebras: products, axioms, derived maps and idempotent splittings."""

from isotype.jternary.algebra import (
    JTernaryAlgebra,
    derivation_D,
    derived_d,
    inner_generators,
)
from isotype.jternary.axioms import (
    check_derived_identities,
    check_jt_axioms,
    check_special_module,
    check_theorem23,
    compare_jternary,
    random_spot_check,
)
from isotype.jternary.derivations import derivation_algebra
from isotype.jternary.split import SplitT, split_T

__all__ = [
    "JTernaryAlgebra",
    "SplitT",
    "check_derived_identities",
    "check_jt_axioms",
    "check_special_module",
    "check_theorem23",
    "compare_jternary",
    "derivation_D",
    "derivation_algebra",
    "derived_d",
    "inner_generators",
    "random_spot_check",
    "split_T",
]
