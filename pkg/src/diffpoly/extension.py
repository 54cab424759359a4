"""Extending a polynomial from a subsemigroup J to the group G = J - J.

For ``t = u - v`` with ``u, v`` in J the extension is

    p(t) = Σ_{j=0}^{n} (-1)^j Δ_v^j q(u),

which only samples q at ``u + j v`` inside J. Independence of the chosen
decomposition goes through the functional ``L(q) = q(u) - Δ_v q(ũ)``; the
verifiers below expose both identities used for that.
"""

from __future__ import annotations

from .differences import GroupFunction, backward_eval, delta
from .errors import (
    DecompositionMismatchError,
    DescriptorMismatchError,
    IdentityFailure,
    MembershipError,
    NoDecompositionError,
)
from .groups import GroupElement, SemigroupDescriptor, orthant_decompose, semigroup_contains
from .polynomials import NewtonForm
from .scalar import ZERO, Scalar

Decomposition = tuple[GroupElement, GroupElement]


def restrict(f, J: SemigroupDescriptor) -> GroupFunction:
    """``f`` as an oracle on J only: evaluating outside J raises :class:`MembershipError`."""
    if isinstance(f, NewtonForm):
        f = f.as_function(J.ambient)

    def rule(t):
        if not semigroup_contains(J, t):
            raise MembershipError(f"oracle on J queried at free={t.free} torsion={t.torsion}")
        return f(t)

    return GroupFunction(J.ambient, rule)


def _require_in(J: SemigroupDescriptor, *points: GroupElement) -> None:
    for x in points:
        if x.descriptor != J.ambient:
            raise DescriptorMismatchError("decomposition point outside the ambient group")
        if not semigroup_contains(J, x):
            raise MembershipError(f"free={x.free} torsion={x.torsion} is not in J")


def _decomposition(J: SemigroupDescriptor, t: GroupElement, decomposition: Decomposition | None) -> Decomposition:
    if decomposition is None:
        if J.kind == "standard_orthant":
            return orthant_decompose(t)
        if J.kind == "full_group":
            return t, J.ambient.zero()
        raise NoDecompositionError("supply t = u - v explicitly for generator-list semigroups")
    u, v = decomposition
    _require_in(J, u, v)
    if u - v != t:
        raise DecompositionMismatchError("u - v does not equal the target point")
    return u, v


def extend_eval(
    q: GroupFunction,
    n: int,
    t: GroupElement,
    J: SemigroupDescriptor,
    decomposition: Decomposition | None = None,
) -> Scalar:
    """Value at ``t`` of the unique degree-<=n polynomial on G extending ``q`` from J."""
    u, v = _decomposition(J, t, decomposition)
    return backward_eval(q, u, v, n)


def well_definedness_check(
    q: GroupFunction,
    n: int,
    t: GroupElement,
    first: Decomposition,
    second: Decomposition,
    J: SemigroupDescriptor,
) -> bool:
    """Both decompositions of ``t`` give the same alternating sum."""
    a = extend_eval(q, n, t, J, first)
    b = extend_eval(q, n, t, J, second)
    return a == b


def l_functional(q: GroupFunction, first: Decomposition, second: Decomposition) -> Scalar:
    """``L(q) = q(u) - Δ_v q(ũ)``, checked against the symmetric form ``q(ũ) - Δ_ṽ q(u)``."""
    (u, v), (u2, v2) = first, second
    if u - v != u2 - v2:
        raise DecompositionMismatchError("decompositions represent different points")
    value = q(u) - (q(u2 + v) - q(u2))
    other = q(u2) - (q(u + v2) - q(u))
    if value != other:
        raise IdentityFailure(f"L(q) disagrees between its two expressions: {value} vs {other}")
    return value


def _iterate(q: GroupFunction, v: GroupElement, v2: GroupElement, j: int) -> GroupFunction:
    g = q
    for _ in range(j):
        g = delta(delta(g, v), v2)
    return g


def identity_1_6_sides(
    q: GroupFunction,
    n: int,
    first: Decomposition,
    second: Decomposition,
    w: GroupElement,
) -> tuple[Scalar, Scalar, Scalar | None]:
    """Left side, right side and (even n only) the remainder term of the L-expansion.

    For n = 2k the right side is ``Σ_{j<k} L(Δ_v^j Δ_ṽ^j q) + Δ_v^k Δ_ṽ^k q(w)``;
    for n = 2k + 1 it is ``Σ_{j<=k} L(Δ_v^j Δ_ṽ^j q)``.
    """
    u, v = first[0], first[1]
    v2 = second[1]
    left = backward_eval(q, u, v, n)
    k, odd = divmod(n, 2)
    right = ZERO
    for j in range(k + (1 if odd else 0)):
        right = right + l_functional(_iterate(q, v, v2, j), first, second)
    remainder = None
    if not odd:
        remainder = _iterate(q, v, v2, k)(w)
        right = right + remainder
    return left, right, remainder


def identity_1_6_check(
    q: GroupFunction,
    n: int,
    first: Decomposition,
    second: Decomposition,
    w: GroupElement,
    J: SemigroupDescriptor,
) -> bool:
    """Verify the L-expansion of the alternating sum for the given data.

    In the even case the remainder ``Δ_v^k Δ_ṽ^k q`` must also take the same
    value at ``w`` and at ``u``, since it is constant on J.
    """
    (u, v), (u2, v2) = first, second
    _require_in(J, u, v, u2, v2, w)
    if u - v != u2 - v2:
        raise DecompositionMismatchError("decompositions represent different points")
    left, right, remainder = identity_1_6_sides(q, n, first, second, w)
    if left != right:
        return False
    if remainder is not None:
        k = n // 2
        if _iterate(q, v, v2, k)(u) != remainder:
            return False
    return True


def restriction_injectivity_check(p: NewtonForm, J: SemigroupDescriptor, reach: int | None = None) -> bool:
    """If p vanishes on a J-spanning probe set then p is the zero form.

    Returns whether that implication holds for ``p``.
    """
    n = p.degree_bound
    reach = n + 1 if reach is None else reach
    f = p.as_function(J.ambient)
    all_zero = all(not f(t) for t in J.probe_points(reach))
    return (not all_zero) or p.is_zero()
