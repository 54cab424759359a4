import itertools

import pytest

from diffpoly.differences import GroupFunction
from diffpoly.errors import DecompositionMismatchError, MembershipError, NoDecompositionError
from diffpoly.extension import (
    extend_eval,
    identity_1_6_check,
    identity_1_6_sides,
    l_functional,
    restrict,
    restriction_injectivity_check,
    well_definedness_check,
)
from diffpoly.groups import GroupDescriptor, SemigroupDescriptor, orthant
from diffpoly.polynomials import NewtonForm, eval_newton

from conftest import random_newton

Z = GroupDescriptor(1)
Z2 = GroupDescriptor(2)


def square_on_n():
    return restrict(GroupFunction(Z, lambda t: t.free[0] ** 2), orthant(Z))


def test_restricted_oracle_refuses_outside_points():
    q = square_on_n()
    assert q(Z.element([3])) == 9
    with pytest.raises(MembershipError):
        q(Z.element([-1]))


def test_extend_example():
    q = square_on_n()
    assert extend_eval(q, 2, Z.element([-2]), orthant(Z)) == 4
    assert extend_eval(q, 2, Z.element([-5]), orthant(Z)) == 25


def test_extend_roundtrip_2d(rng):
    J = orthant(Z2)
    for _ in range(10):
        p = random_newton(rng, 2, 3, complex_=True)
        q = restrict(p, J)
        for t in itertools.product(range(-3, 4), repeat=2):
            assert extend_eval(q, 3, Z2.element(t), J) == eval_newton(p, t)


def test_extend_with_generator_list_semigroup():
    J = SemigroupDescriptor(Z, "generator_list", (Z.element([2]), Z.element([3])))
    p = NewtonForm(Z, 2, {(1,): 1, (2,): 2})  # t^2
    q = restrict(p, J)
    with pytest.raises(NoDecompositionError):
        extend_eval(q, 2, Z.element([-1]), J)
    assert extend_eval(q, 2, Z.element([-1]), J, (Z.element([2]), Z.element([3]))) == 1
    with pytest.raises(MembershipError):
        extend_eval(q, 2, Z.element([-1]), J, (Z.element([0]), Z.element([1])))
    with pytest.raises(DecompositionMismatchError):
        extend_eval(q, 2, Z.element([-1]), J, (Z.element([3]), Z.element([3])))


def test_well_definedness(rng):
    J = orthant(Z2)
    p = random_newton(rng, 2, 4)
    q = restrict(p, J)
    t = Z2.element([-2, 1])
    first = (Z2.element([0, 1]), Z2.element([2, 0]))
    second = (Z2.element([3, 4]), Z2.element([5, 3]))
    assert well_definedness_check(q, 4, t, first, second, J)


def test_l_functional_symmetry():
    q = GroupFunction(Z, lambda t: t.free[0] ** 2)
    first, second = (Z.element([1]), Z.element([3])), (Z.element([4]), Z.element([6]))
    assert l_functional(q, first, second) == 1 - (49 - 16)
    with pytest.raises(DecompositionMismatchError):
        l_functional(q, first, (Z.element([0]), Z.element([1])))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_l_expansion_both_parities(n, rng):
    J = orthant(Z2)
    for _ in range(5):
        q = random_newton(rng, 2, n).as_function()
        u = Z2.element([rng.randint(0, 4), rng.randint(0, 4)])
        v = Z2.element([rng.randint(0, 4), rng.randint(0, 4)])
        c = Z2.element([rng.randint(0, 4), rng.randint(0, 4)])
        w = Z2.element([rng.randint(0, 4), rng.randint(0, 4)])
        u2, v2 = u + c, v + c
        first, second = (u, v), (u2, v2)
        assert identity_1_6_check(q, n, first, second, w, J)
        _, _, remainder = identity_1_6_sides(q, n, first, second, w)
        assert (remainder is None) == (n % 2 == 1)


def test_identity_fails_for_non_polynomials():
    J = orthant(Z)
    q = GroupFunction(Z, lambda t: 3 ** t.free[0])
    first, second = (Z.element([1]), Z.element([2])), (Z.element([3]), Z.element([4]))
    assert not identity_1_6_check(q, 2, first, second, Z.element([0]), J)


def test_restriction_injectivity(rng):
    J = orthant(Z2)
    assert restriction_injectivity_check(NewtonForm(Z2, 3), J)
    for _ in range(10):
        assert restriction_injectivity_check(random_newton(rng, 2, 3), J)
