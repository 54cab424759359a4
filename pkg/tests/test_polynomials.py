import itertools
import math
from fractions import Fraction

import pytest

from diffpoly.differences import GroupFunction, iterated_delta
from diffpoly.errors import InvalidInputError, NotAPolynomialError
from diffpoly.groups import GroupDescriptor
from diffpoly.polynomials import (
    MonomialForm,
    NewtonForm,
    binom,
    degree_reduce_check,
    eval_monomial,
    eval_newton,
    homogeneous_parts,
    leading_coefficient,
    monomial,
    monomial_to_newton,
    multi_indices,
    newton_from_oracle,
    newton_to_monomial,
    stirling1,
    stirling2,
    tensor_product,
)
from diffpoly.scalar import Scalar

from conftest import random_monomial, random_newton, vandermonde_parts

Z = GroupDescriptor(1)
Z2 = GroupDescriptor(2)


def test_binom_generalized():
    assert binom(5, 2) == 10
    assert binom(-1, 3) == -1
    assert binom(-3, 2) == 6
    assert binom(2, 5) == 0


def test_stirling_small_values():
    assert [stirling2(4, j) for j in range(5)] == [0, 1, 7, 6, 1]
    assert [stirling1(4, j) for j in range(5)] == [0, -6, 11, -6, 1]


def test_stirling_inverse_matrices():
    n = 8
    for i in range(n + 1):
        for j in range(n + 1):
            s = sum(stirling1(i, m) * stirling2(m, j) for m in range(n + 1))
            assert s == (1 if i == j else 0)


def test_newton_examples():
    # t^2 = 2 C(t,2) + C(t,1)
    p = NewtonForm(Z, 2, {(1,): 1, (2,): 2})
    assert [eval_newton(p, x) for x in (-2, 0, 3)] == [4, 0, 9]
    assert newton_to_monomial(p) == monomial(Z, (2,))


def test_newton_bound_enforced():
    with pytest.raises(InvalidInputError):
        NewtonForm(Z, 1, {(2,): 1})


def test_newton_from_oracle_examples():
    f = GroupFunction(Z2, lambda t: t.free[0] * t.free[1] + 3)
    p = newton_from_oracle(f, 2)
    assert p.coeffs == {(0, 0): 3, (1, 1): 1}
    with pytest.raises(NotAPolynomialError):
        newton_from_oracle(GroupFunction(Z, lambda t: t.free[0] ** 3), 2)


def test_newton_from_oracle_roundtrip(rng):
    for _ in range(20):
        p = random_newton(rng, 2, 3, complex_=True)
        assert newton_from_oracle(p.as_function(), 3) == p


def test_newton_vs_monomial_evaluation(rng):
    for _ in range(30):
        k = rng.randint(1, 3)
        q = random_monomial(rng, k, 4, complex_=True)
        p = monomial_to_newton(q)
        assert newton_to_monomial(p) == q
        for _ in range(5):
            t = tuple(rng.randint(-5, 5) for _ in range(k))
            direct = sum((c * math.prod(x**e for x, e in zip(t, a)) for a, c in q.items()), Scalar(0))
            assert eval_newton(p, t) == eval_monomial(q, t) == direct


def test_arithmetic_is_pointwise(rng):
    p, q = random_newton(rng, 2, 3), random_newton(rng, 2, 2)
    for t in itertools.product(range(-2, 3), repeat=2):
        assert eval_newton(p + q, t) == eval_newton(p, t) + eval_newton(q, t)
        assert eval_newton(p - q * 3, t) == eval_newton(p, t) - 3 * eval_newton(q, t)


def test_monomial_product():
    s, t = monomial(Z2, (1, 0)), monomial(Z2, (0, 1))
    assert (s + t) * (s - t) == monomial(Z2, (2, 0)) - monomial(Z2, (0, 2))


def test_homogeneous_parts_example():
    # p(t) = t^2 + 3t + 1
    p = monomial_to_newton(MonomialForm(Z, {(2,): 1, (1,): 3, (0,): 1}))
    parts = homogeneous_parts(p)
    assert parts == [MonomialForm(Z, {(0,): 1}), MonomialForm(Z, {(1,): 3}), MonomialForm(Z, {(2,): 1})]


def test_homogeneous_parts_properties(rng):
    for _ in range(40):
        k, n = rng.randint(1, 3), rng.randint(0, 4)
        p = random_newton(rng, k, n, complex_=rng.random() < 0.3)
        parts = homogeneous_parts(p)
        assert len(parts) == n + 1
        total = MonomialForm(p.group)
        for j, a in enumerate(parts):
            assert a.is_zero() or a.homogeneous_in() == j
            total = total + a
        assert monomial_to_newton(total, n) == p
        for _ in range(3):
            t = tuple(rng.randint(-3, 3) for _ in range(k))
            for m in range(-3, 4):
                mt = tuple(m * x for x in t)
                for j, a in enumerate(parts):
                    assert eval_monomial(a, mt) == m**j * eval_monomial(a, t)


def test_homogeneous_parts_against_vandermonde(rng):
    for _ in range(10):
        k, n = rng.randint(1, 2), rng.randint(1, 4)
        p = random_newton(rng, k, n)
        f = p.as_function()
        parts = homogeneous_parts(p)
        t = p.group.element([rng.randint(-3, 3) for _ in range(k)])
        oracle = vandermonde_parts(f, t, n)
        assert oracle == [eval_monomial(a, t.free) for a in parts]


def test_leading_coefficient_examples():
    p = monomial_to_newton(MonomialForm(Z, {(2,): 3, (1,): 1}))
    assert leading_coefficient(p, Z.element([1])) == 3
    assert leading_coefficient(p, Z.element([2]), Z.element([7])) == 12


def test_leading_coefficient_constant_in_t(rng):
    for _ in range(20):
        p = random_newton(rng, 2, 3, exact_degree=True)
        s = Z2.element([rng.randint(-3, 3), rng.randint(-3, 3)])
        f = p.as_function()
        values = {iterated_delta(f, s, 3, Z2.element([rng.randint(-9, 9), rng.randint(-9, 9)])) for _ in range(6)}
        assert len(values) == 1
        top = vandermonde_parts(f, s, 3)[3]
        assert values.pop() == math.factorial(3) * top == math.factorial(3) * leading_coefficient(p, s)


def test_degree_reduce_check():
    p = monomial_to_newton(MonomialForm(Z2, {(2, 0): 1, (1, 1): -1}), 3)
    assert degree_reduce_check(p, 2)
    q = monomial_to_newton(MonomialForm(Z2, {(2, 0): 1, (1, 0): 1}), 3)
    assert not degree_reduce_check(q, 2)


def test_tensor_product_is_pointwise_product(rng):
    q = random_newton(rng, 1, 2)
    r = random_newton(rng, 1, 2)
    pr = tensor_product(q, r, Z2)
    for s, t in itertools.product(range(-3, 4), repeat=2):
        assert eval_newton(pr, (s, t)) == eval_newton(q, (s,)) * eval_newton(r, (t,))


def test_graded_order_of_indices():
    idx = multi_indices(2, 2)
    assert idx[0] == (0, 0)
    assert [sum(a) for a in idx] == sorted(sum(a) for a in idx)
    assert len(idx) == 6


def test_fraction_coefficients():
    half = Fraction(1, 2)
    p = NewtonForm(Z, 2, {(2,): half})
    assert eval_newton(p, 4) == 3
