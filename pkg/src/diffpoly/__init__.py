"""Exact finite-difference calculus for polynomials on finitely generated abelian groups."""

from .differences import (
    GroupFunction,
    backward_eval,
    degree_test,
    delta,
    iterated_delta,
    shift_expand,
    verify_binomial_identities,
)
from .errors import DiffPolyError
from .extension import (
    extend_eval,
    identity_1_6_check,
    l_functional,
    restrict,
    restriction_injectivity_check,
    well_definedness_check,
)
from .groups import (
    GroupDescriptor,
    GroupElement,
    SemigroupDescriptor,
    add,
    h0_subgroup,
    orthant_decompose,
    project_mod_h0,
    scalar_mul,
    semigroup_contains,
)
from .polynomials import (
    MonomialForm,
    NewtonForm,
    degree_reduce_check,
    eval_newton,
    homogeneous_parts,
    leading_coefficient,
    monomial_to_newton,
    newton_from_oracle,
    newton_to_monomial,
)
from .riss import InertiaDecomposition, SymmetricForm, riss_form_of, squares_decomposition, sylvester_diagonalize
from .scalar import Scalar
from .spaces import (
    dim_pn,
    dual_system,
    h0_constancy_check,
    infinite_dim_certificate,
    monomial_basis,
    restriction_dim_check,
    tensor_split,
    torsion_constancy_check,
)

__version__ = "0.1.0"

__all__ = [
    "add",
    "backward_eval",
    "degree_reduce_check",
    "degree_test",
    "delta",
    "DiffPolyError",
    "dim_pn",
    "dual_system",
    "eval_newton",
    "extend_eval",
    "GroupDescriptor",
    "GroupElement",
    "GroupFunction",
    "h0_constancy_check",
    "h0_subgroup",
    "homogeneous_parts",
    "identity_1_6_check",
    "InertiaDecomposition",
    "infinite_dim_certificate",
    "iterated_delta",
    "l_functional",
    "leading_coefficient",
    "monomial_basis",
    "monomial_to_newton",
    "MonomialForm",
    "newton_from_oracle",
    "newton_to_monomial",
    "NewtonForm",
    "orthant_decompose",
    "project_mod_h0",
    "restrict",
    "restriction_dim_check",
    "restriction_injectivity_check",
    "riss_form_of",
    "Scalar",
    "scalar_mul",
    "semigroup_contains",
    "SemigroupDescriptor",
    "shift_expand",
    "squares_decomposition",
    "sylvester_diagonalize",
    "SymmetricForm",
    "tensor_split",
    "torsion_constancy_check",
    "verify_binomial_identities",
    "well_definedness_check",
    "__version__",
]
