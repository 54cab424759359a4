"""Homogeneous quadratic forms as signed sums of squares of independent homomorphisms.

On Z^k every polynomial is a polynomial in the coordinate homomorphisms, so a
homogeneous degree-2 polynomial is a symmetric matrix C with ``p(x) = x^T C x``.
A rational congruence ``P^T C P = diag(d)`` then writes ``p`` as
``Σ d_j (α_j · x)^2`` with ``α_j`` the rows of ``P^{-1}``.

Diagonal entries are kept rational; normalizing them to ±1 would need square
roots. The sign pattern is carried by the signature instead.

The infinite-dimensional non-Riss phenomenon on a discrete Hilbert space is
not modelled: every finite truncation of such a form is a matrix here, and the
decomposition always exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import InvalidInputError, NotHomogeneousError
from .groups import GroupDescriptor
from .polynomials import MonomialForm
from .scalar import Scalar


@dataclass(frozen=True)
class SymmetricForm:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidInputError("symmetric form must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidInputError(f"entries ({i},{j}) and ({j},{i}) differ")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def matrix(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def value(self, x: Sequence) -> Fraction:
        return sum(
            (self.entries[i][j] * x[i] * x[j] for i in range(self.dim) for j in range(self.dim)),
            Fraction(0),
        )


@dataclass(frozen=True)
class InertiaDecomposition:
    transform: tuple[tuple[Fraction, ...], ...]
    diagonal: tuple[Fraction, ...]

    @property
    def signature(self) -> tuple[int, int, int]:
        plus = sum(1 for d in self.diagonal if d > 0)
        minus = sum(1 for d in self.diagonal if d < 0)
        return plus, minus, len(self.diagonal) - plus - minus


def sylvester_diagonalize(C: SymmetricForm) -> InertiaDecomposition:
    """Exact congruence ``P^T C P = diag(d)`` by symmetric elimination.

    When every remaining diagonal entry is zero but an off-diagonal one is not,
    adding row/column j to row/column i creates the pivot ``2 c_ij``.
    """
    n = C.dim
    a = C.matrix()
    p = linalg.identity(n)

    def add_multiple(dst, src, f):
        # congruence by E = I + f e_src e_dst^T: col dst += f col src, then row dst += f row src
        for row in a:
            row[dst] += f * row[src]
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        for row in p:
            row[dst] += f * row[src]

    def swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        a[i], a[j] = a[j], a[i]
        for row in p:
            row[i], row[j] = row[j], row[i]

    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if j is None:
                    continue
                add_multiple(i, j, Fraction(1))
        pivot = a[i][i]
        for j in range(i + 1, n):
            if a[j][i]:
                add_multiple(j, i, -a[j][i] / pivot)

    return InertiaDecomposition(
        transform=tuple(tuple(r) for r in p),
        diagonal=tuple(a[i][i] for i in range(n)),
    )


def squares_decomposition(C: SymmetricForm) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
    """``[(d_j, α_j)]`` with ``x^T C x = Σ d_j (α_j · x)^2`` and the α_j independent.

    Directions with ``d_j = 0`` are dropped, so the list has rank(C) entries.
    """
    dec = sylvester_diagonalize(C)
    if C.dim == 0:
        return []
    inv = linalg.inverse(dec.transform)
    return [(d, tuple(inv[j])) for j, d in enumerate(dec.diagonal) if d != 0]


def squares_to_monomial(terms, group: GroupDescriptor) -> MonomialForm:
    """Symbolic expansion of ``Σ d_j (α_j · x)^2``."""
    k = group.free_rank
    out: dict[tuple[int, ...], Scalar] = {}
    for d, alpha in terms:
        for i in range(k):
            for j in range(k):
                c = d * alpha[i] * alpha[j]
                if c:
                    idx = [0] * k
                    idx[i] += 1
                    idx[j] += 1
                    out[tuple(idx)] = out.get(tuple(idx), Scalar(0)) + c
    return MonomialForm(group, out)


def symmetric_to_monomial(C: SymmetricForm, group: GroupDescriptor | None = None) -> MonomialForm:
    """Symbolic expansion of ``Σ_ij c_ij x_i x_j``."""
    n = C.dim
    out: dict[tuple[int, ...], Fraction] = {}
    for i in range(n):
        for j in range(n):
            idx = tuple(int(m == i) + int(m == j) for m in range(n))
            out[idx] = out.get(idx, Fraction(0)) + C.entries[i][j]
    return MonomialForm(group or GroupDescriptor(n), out)


def riss_form_of(p: MonomialForm) -> SymmetricForm:
    """Symmetric matrix of a homogeneous degree-2 polynomial in the coordinates."""
    k = p.k
    c = [[Fraction(0)] * k for _ in range(k)]
    for alpha, value in p.items():
        if sum(alpha) != 2:
            raise NotHomogeneousError(f"monomial {alpha} is not of order 2")
        if value.im != 0:
            raise InvalidInputError("only real quadratic forms have a symmetric matrix here")
        idx = [i for i, a in enumerate(alpha) for _ in range(a)]
        i, j = idx
        if i == j:
            c[i][i] = value.re
        else:
            c[i][j] = c[j][i] = value.re / 2
    return SymmetricForm(tuple(tuple(r) for r in c))
