import random
from fractions import Fraction

import pytest

from diffpoly.groups import GroupDescriptor
from diffpoly.polynomials import MonomialForm, NewtonForm, multi_indices
from diffpoly.scalar import Scalar


def random_scalar(rng, complex_=False, bound=6):
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
    im = Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) if complex_ else 0
    return Scalar(re, im)


def random_newton(rng, k, n, torsion=(), exact_degree=False, complex_=False, density=0.7):
    g = GroupDescriptor(k, torsion)
    coeffs = {a: random_scalar(rng, complex_) for a in multi_indices(k, n) if rng.random() < density}
    if exact_degree:
        top = [a for a in multi_indices(k, n) if sum(a) == n]
        a = rng.choice(top)
        coeffs[a] = Scalar(rng.choice([-3, -2, -1, 1, 2, 3]))
    return NewtonForm(g, n, coeffs)


def random_monomial(rng, k, n, complex_=False, density=0.7):
    g = GroupDescriptor(k)
    return MonomialForm(g, {a: random_scalar(rng, complex_) for a in multi_indices(k, n) if rng.random() < density})


def poly_oracle(coeffs_by_power):
    """Univariate closed-form polynomial ``t -> Σ c_i t^i`` on Z (oracle independent of the Newton machinery)."""
    return lambda t: sum(c * t.free[0] ** i for i, c in enumerate(coeffs_by_power))


@pytest.fixture
def rng():
    return random.Random(20261018)


def vandermonde_parts(f, t, n):
    """Oracle: the coefficients ``c_j`` with ``f(m t) = Σ_j c_j m^j`` for m = 0..n, by an exact sympy solve."""
    import sympy

    V = sympy.Matrix(n + 1, n + 1, lambda m, j: sympy.Integer(m) ** j)
    vals = [f(m * t) for m in range(n + 1)]
    out = []
    for part in ("re", "im"):
        rhs = sympy.Matrix([sympy.Rational(getattr(v, part).numerator, getattr(v, part).denominator) for v in vals])
        out.append(V.LUsolve(rhs))
    return [Scalar(Fraction(int(out[0][j].p), int(out[0][j].q)), Fraction(int(out[1][j].p), int(out[1][j].q))) for j in range(n + 1)]
