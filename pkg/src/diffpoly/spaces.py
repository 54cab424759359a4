"""Dimensions and bases of P^n on Z^k x F (plus a formal R^m), with the constructions behind them."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .differences import (
    GroupFunction,
    _difference_tables,
    degree_test,
    iterated_delta,
)
from .errors import DegenerateInputError, DegreeViolationError, InvalidInputError
from .groups import GroupDescriptor, GroupElement, SemigroupDescriptor, orthant
from .polynomials import (
    MonomialForm,
    NewtonForm,
    monomial,
    monomial_to_newton,
    multi_indices,
    multi_indices_of_order,
    newton_from_oracle,
    tensor_product,
)
from .scalar import Scalar


def dim_pn(G: GroupDescriptor, n: int) -> int:
    """``C(n + m + k, m + k)``: monomials of degree <= n in the m + k real and free coordinates."""
    if n < 0:
        raise ValueError("n must be non-negative")
    r = G.free_rank + G.formal_real_rank
    return math.comb(n + r, r)


def monomial_basis(k: int, n: int, verify: bool = False) -> list[MonomialForm]:
    """All ``t^α`` with |α| <= n, graded-lex; optionally rank-checked on the box [0, n]^k."""
    g = GroupDescriptor(k)
    basis = [monomial(g, alpha) for alpha in multi_indices(k, n)]
    if verify:
        points = list(itertools.product(range(n + 1), repeat=k))
        if evaluation_rank(basis, points) != len(basis):
            raise AssertionError("monomial basis failed its independence check")
    return basis


def evaluation_matrix(forms: Sequence, points: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Rows are points, columns are forms."""
    rows = []
    for x in points:
        row = []
        for f in forms:
            v = f(tuple(x))
            if v.im != 0:
                raise InvalidInputError("evaluation matrix rank is computed over real values")
            row.append(v.re)
        rows.append(row)
    return rows


def evaluation_rank(forms: Sequence, points: Sequence[Sequence[int]]) -> int:
    return linalg.rank(evaluation_matrix(forms, points))


# ---------------------------------------------------------------------------
# dual systems and tensor splitting


def _top_difference(q: NewtonForm, t: GroupElement, n: int) -> Scalar:
    """``Δ_t^n q``; constant in the base point when deg q <= n."""
    return iterated_delta(q.as_function(t.descriptor), t, n, t.descriptor.zero())


def _candidate_points(J: SemigroupDescriptor, n: int) -> list[GroupElement]:
    pts = [t for t in J.probe_points(n) if not t.is_zero()]
    return sorted(pts, key=lambda t: (sum(abs(x) for x in t.free), [-x for x in t.free], t.torsion))


def dual_system(
    Q: Sequence[NewtonForm], n: int, J: SemigroupDescriptor | None = None
) -> tuple[list[NewtonForm], list[GroupElement]]:
    """Forms ``q_j`` spanning the same space as Q modulo P^(n-1), and points ``t_i`` of J,
    with ``Δ_{t_i}^n q_j = δ_ij``.

    Each form is reduced against the earlier ``q``'s, a point where its n-th
    difference is nonzero is picked, and it is normalized there. Earlier forms
    are then cleared at the new point, which keeps the system biorthogonal.
    """
    if not Q:
        return [], []
    g = Q[0].group
    J = J or orthant(g)
    candidates = _candidate_points(J, n)
    qs: list[NewtonForm] = []
    ts: list[GroupElement] = []
    for p in Q:
        if p.degree is None or p.degree != n:
            raise DegenerateInputError(f"form of degree {p.degree} where exact degree {n} is required")
        r = p
        for q, t in zip(qs, ts):
            c = _top_difference(r, t, n)
            if c:
                r = r - q * c
        for t in candidates:
            c = _top_difference(r, t, n)
            if c:
                break
        else:
            raise DegenerateInputError("forms are linearly dependent modulo lower degree")
        r = r / c
        for i, q in enumerate(qs):
            c_i = _top_difference(q, t, n)
            if c_i:
                qs[i] = q - r * c_i
        qs.append(r)
        ts.append(t)
    for i, t in enumerate(ts):
        for j, q in enumerate(qs):
            if _top_difference(q, t, n) != (1 if i == j else 0):
                raise AssertionError("dual system lost its biorthogonality")
    return qs, ts


@dataclass(frozen=True)
class SplitTerm:
    m: int
    left: NewtonForm
    right: NewtonForm


def _embed_left(t: GroupElement, whole: GroupDescriptor) -> GroupElement:
    return GroupElement(whole, t.free + (0,) * (whole.free_rank - len(t.free)), (0,) * len(whole.torsion_orders))


def tensor_split(p: NewtonForm, split: tuple[int, int], n: int) -> list[SplitTerm]:
    """Write ``p(s, t) = Σ q(s) r(t)`` with deg q = m and deg r <= n - m.

    For each m the degree-m monomials of the first factor give a complement of
    P^(m-1); a dual system for it reads off ``r_i^m(t) = Δ^m_{(s_i, 0)} R(·, t)``
    from the running remainder R, from m = n down to 0.
    """
    k1, k2 = split
    if k1 + k2 != p.k:
        raise InvalidInputError(f"split {split} does not match free rank {p.k}")
    if p.degree is not None and p.degree > n:
        raise DegreeViolationError(f"form has degree {p.degree} > {n}")
    g1, g2 = GroupDescriptor(k1), GroupDescriptor(k2)
    whole = GroupDescriptor(k1 + k2)
    p = NewtonForm(whole, n, p.coeffs)
    remainder = p
    terms: list[SplitTerm] = []
    for h in range(n, -1, -1):
        if h == 0:
            qs = [NewtonForm(g1, 0, {(0,) * k1: 1})]
            ts = [g1.zero()]
        else:
            basis = [monomial_to_newton(monomial(g1, a)).with_bound(h) for a in multi_indices_of_order(k1, h)]
            qs, ts = dual_system(basis, h, orthant(g1))
        R = remainder.as_function(whole)
        for q, s in zip(qs, ts):
            step = _embed_left(s, whole)
            base = lambda t, step=step: iterated_delta(R, step, h, GroupElement(whole, (0,) * k1 + t.free, ()))
            r = newton_from_oracle(GroupFunction(g2, base), n, check=False)
            if r.degree is not None and r.degree > n - h:
                raise AssertionError(f"factor of degree {r.degree} exceeds {n - h}")
            r = r.with_bound(n - h)
            if r.is_zero():
                continue
            terms.append(SplitTerm(h, q.with_bound(h), r))
            remainder = remainder - tensor_product(q, r, whole)
    if not remainder.is_zero():
        raise AssertionError("tensor split left a nonzero remainder")
    return terms


def recombine(terms: Sequence[SplitTerm], whole: GroupDescriptor, n: int) -> NewtonForm:
    total = NewtonForm(whole, n)
    for term in terms:
        total = total + tensor_product(term.left, term.right, whole)
    return total


# ---------------------------------------------------------------------------
# torsion and H_0


@dataclass
class TorsionReport:
    order: int
    n: int
    passing_dimension: int | None = None
    constants_only: bool | None = None
    witness: dict | None = field(default=None)


def _difference_rows(G: GroupDescriptor, n: int) -> list[list[int]]:
    """Linear functionals ``f -> Δ^α f(t)`` for all generator multi-indices α of order n+1 and all t."""
    elems = list(G.torsion_residues())
    shape = G.torsion_orders
    columns = []
    for e in elems:
        basis = np.zeros(shape, dtype=object)
        basis[e] = 1
        col = []
        for _, table in _difference_tables(basis, 0, n + 1):
            col.extend(int(x) for x in table.ravel())
        columns.append(col)
    return linalg.transpose(columns)


def torsion_constancy_check(G: GroupDescriptor, n: int, table: dict | None = None) -> TorsionReport:
    """On a finite group only constants pass the degree test at any level.

    Without ``table``: the space of functions passing :func:`degree_test` at
    level n is computed as a kernel and certified to be the constants. With a
    table of values: if it is non-constant, a witness ``Δ_h^(n+1) f(t) != 0`` is
    located by exhaustive search over h and t.
    """
    if not G.is_finite:
        raise InvalidInputError("torsion_constancy_check needs a finite group")
    order = G.torsion_size
    report = TorsionReport(order=order, n=n)
    if table is None:
        rows = _difference_rows(G, n)
        rk = linalg.rank(rows) if rows else 0
        report.passing_dimension = order - rk
        report.constants_only = report.passing_dimension == 1
        return report
    values = {tuple(k.torsion) if isinstance(k, GroupElement) else tuple(k): Scalar.coerce(v) for k, v in table.items()}
    f = GroupFunction(G, lambda t: values[t.torsion])
    elems = [G.element((), e) for e in G.torsion_residues()]
    report.constants_only = len(set(values.values())) <= 1
    if report.constants_only:
        report.passing_dimension = None
        if not degree_test(f, n, exact=False):
            raise AssertionError("a constant failed the degree test")
        return report
    for h in elems:
        for t in elems:
            d = iterated_delta(f, h, n + 1, t)
            if d:
                report.witness = {"step": list(h.torsion), "point": list(t.torsion), "order": n + 1, "value": d}
                return report
    raise AssertionError("non-constant function on a finite group with all differences vanishing")


def h0_constancy_check(f, G: GroupDescriptor, probe_radius: int = 3) -> bool:
    """Whether ``f`` is constant on every coset ``{x} x F`` with x in the probe box."""
    if isinstance(f, (NewtonForm, MonomialForm)):
        f = f.as_function(G)
    for free in itertools.product(range(-probe_radius, probe_radius + 1), repeat=G.free_rank):
        values = {f(GroupElement(G, free, tor)) for tor in G.torsion_residues()}
        if len(values) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# certificates


@dataclass
class InfiniteDimCertificate:
    n: int
    matrix: list[list[int]]
    rank: int
    witness_points: list[list[int]]
    degree_one: bool
    additive: bool


def infinite_dim_certificate(N: int, seed: int = 0) -> InfiniteDimCertificate:
    """Coordinate evaluations ``p_i(s) = s(i)`` on finitely supported sequences, truncated to N coordinates.

    The N x N evaluation matrix at the unit sequences has rank N, so P^1 has
    dimension at least N. Each ``p_i`` is certified additive with ``p_i(0) = 0``
    (hence of degree <= 1) and nonzero (hence of degree exactly 1).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    rng = random.Random(seed)
    G = GroupDescriptor(N)
    deltas = [G.free_unit(j) for j in range(N)]
    coords = [GroupFunction(G, lambda s, i=i: s.free[i]) for i in range(N)]
    matrix = [[int(p(d).re) for d in deltas] for p in coords]
    rk = linalg.rank(matrix)

    pairs = [(a, b, deltas[a] + deltas[b]) for a in range(N) for b in range(a, N)]
    samples = [(deltas[a], deltas[b], ab) for a, b, ab in pairs]
    for _ in range(4):
        x = G.element([rng.randint(-5, 5) for _ in range(N)])
        y = G.element([rng.randint(-5, 5) for _ in range(N)])
        samples.append((x, y, x + y))
    zero = G.zero()
    additive = True
    degree_one = True
    for i, p in enumerate(coords):
        if p(zero) != 0 or any(p(xy) != p(x) + p(y) for x, y, xy in samples):
            additive = False
        # Δ_{e_a} Δ_{e_b} p(0) = 0 for every pair of unit directions, and Δ_{e_i} p = 1
        if any(p(ab) - p(deltas[a]) - p(deltas[b]) + p(zero) for a, b, ab in pairs):
            degree_one = False
        if p(deltas[i]) - p(zero) != 1:
            degree_one = False
    return InfiniteDimCertificate(
        n=N,
        matrix=matrix,
        rank=rk,
        witness_points=[list(d.free) for d in deltas],
        degree_one=degree_one and additive,
        additive=additive,
    )


@dataclass
class RestrictionReport:
    k: int
    index: int
    n: int
    dim: int
    restricted_rank: int
    pulled_back_rank: int


def restriction_dim_check(k: int, index: int, n: int) -> RestrictionReport:
    """Restriction from Z^k to the sublattice (index Z)^k preserves dimension.

    The monomial basis of P^n(Z^k) stays independent on sample points of the
    sublattice, and pulling a basis of P^n on the sublattice back along
    ``t -> index * t`` gives an independent family on Z^k.
    """
    if index < 1:
        raise ValueError("sublattice index must be >= 1")
    basis = monomial_basis(k, n)
    box = list(itertools.product(range(n + 1), repeat=k))
    lattice_points = [tuple(index * x for x in pt) for pt in box]
    restricted = evaluation_rank(basis, lattice_points)
    # a basis of P^n(H) in lattice coordinates is h -> (h / index)^α; its pullback is t -> t^α
    sub_basis = [
        (lambda h, a=a: Scalar(math.prod((Fraction(x, index)) ** e for x, e in zip(h, a))))
        for a in multi_indices(k, n)
    ]
    pulled = [(lambda t, f=f: f(tuple(index * x for x in t))) for f in sub_basis]
    pulled_rank = evaluation_rank(pulled, box)
    return RestrictionReport(k, index, n, dim_pn(GroupDescriptor(k), n), restricted, pulled_rank)
