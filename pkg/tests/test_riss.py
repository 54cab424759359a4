from fractions import Fraction

import pytest
import sympy

from diffpoly import linalg
from diffpoly.errors import InvalidInputError, NotHomogeneousError
from diffpoly.groups import GroupDescriptor
from diffpoly.polynomials import MonomialForm
from diffpoly.riss import (
    SymmetricForm,
    riss_form_of,
    squares_decomposition,
    squares_to_monomial,
    sylvester_diagonalize,
    symmetric_to_monomial,
)


def random_symmetric(rng, n):
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = Fraction(rng.randint(-4, 4), rng.randint(1, 2))
    return SymmetricForm(tuple(map(tuple, a)))


def random_invertible(rng, n):
    while True:
        m = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(n)] for _ in range(n)]
        if sympy.Matrix(m).det() != 0:
            return m


def congruent(C, P):
    return SymmetricForm(tuple(map(tuple, linalg.matmul(linalg.matmul(linalg.transpose(P), C.matrix()), P))))


def sympy_signature(C):
    # oracle: signs of the characteristic polynomial roots via Descartes-free eigen count
    eig = sympy.Matrix(C.matrix()).eigenvals()
    plus = sum(m for e, m in eig.items() if sympy.re(sympy.N(e, 50)) > 1e-30)
    minus = sum(m for e, m in eig.items() if sympy.re(sympy.N(e, 50)) < -1e-30)
    return plus, minus, C.dim - plus - minus


def test_hyperbolic_plane():
    C = SymmetricForm(((0, 1), (1, 0)))
    dec = sylvester_diagonalize(C)
    assert dec.signature == (1, 1, 0)
    assert linalg.matmul(linalg.matmul(linalg.transpose(dec.transform), C.matrix()), dec.transform) == [
        [dec.diagonal[0], 0],
        [0, dec.diagonal[1]],
    ]


def test_asymmetric_rejected():
    with pytest.raises(InvalidInputError):
        SymmetricForm(((1, 2), (3, 4)))


@pytest.mark.parametrize("n", range(1, 7))
def test_diagonalization_and_signature(n, rng):
    for _ in range(6):
        C = random_symmetric(rng, n)
        dec = sylvester_diagonalize(C)
        D = linalg.matmul(linalg.matmul(linalg.transpose(dec.transform), C.matrix()), dec.transform)
        assert D == [[dec.diagonal[i] if i == j else 0 for j in range(n)] for i in range(n)]
        assert linalg.det(dec.transform) != 0
        if n <= 4:
            assert dec.signature == sympy_signature(C)
        for _ in range(3):
            assert sylvester_diagonalize(congruent(C, random_invertible(rng, n))).signature == dec.signature


def test_zero_diagonal_with_off_diagonal_entries():
    C = SymmetricForm(((0, 0, 1), (0, 0, 2), (1, 2, 0)))
    assert sylvester_diagonalize(C).signature == (1, 1, 1)


def test_squares_reexpand(rng):
    for n in range(1, 6):
        C = random_symmetric(rng, n)
        g = GroupDescriptor(n)
        terms = squares_decomposition(C)
        assert len(terms) == sympy.Matrix(C.matrix()).rank()
        assert squares_to_monomial(terms, g) == symmetric_to_monomial(C, g)
        if terms:
            assert sympy.Matrix([list(a) for _, a in terms]).rank() == len(terms)


def test_riss_form_of():
    g = GroupDescriptor(2)
    p = MonomialForm(g, {(2, 0): 1, (1, 1): 3, (0, 2): -2})
    C = riss_form_of(p)
    assert C.matrix() == [[1, Fraction(3, 2)], [Fraction(3, 2), -2]]
    assert symmetric_to_monomial(C, g) == p
    with pytest.raises(NotHomogeneousError):
        riss_form_of(MonomialForm(g, {(1, 0): 1}))
