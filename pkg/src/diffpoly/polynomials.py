"""Polynomials on Z^k (torsion coordinates ignored) in the Newton and monomial bases.

A :class:`NewtonForm` stores the iterated differences ``Δ^α p(0)`` along the
unit vectors and evaluates by

    p(t) = Σ_α C(t_1, α_1) ... C(t_k, α_k) Δ^α p(0)

with generalized binomials, so it is defined on all of Z^k. A
:class:`MonomialForm` stores coefficients of ``t^α``. The two are related by
Stirling numbers of both kinds.
"""

from __future__ import annotations

import itertools
import math
import threading
from fractions import Fraction
from typing import Iterable, Mapping

from .differences import GroupFunction, degree_test, iterated_delta
from .errors import DescriptorMismatchError, InvalidInputError, NotAPolynomialError
from .groups import GroupDescriptor, GroupElement
from .scalar import ZERO, Scalar

MultiIndex = tuple[int, ...]


def order(alpha: MultiIndex) -> int:
    return sum(alpha)


def graded_key(alpha: MultiIndex) -> tuple:
    """Graded-lexicographic sort key: total order first, then reverse-lex so t1 precedes t2."""
    return (sum(alpha), tuple(-a for a in alpha))


def multi_indices(k: int, n: int) -> list[MultiIndex]:
    """All multi-indices of length k and order <= n, graded-lex."""
    out = [a for a in itertools.product(range(n + 1), repeat=k) if sum(a) <= n]
    return sorted(out, key=graded_key)


def multi_indices_of_order(k: int, n: int) -> list[MultiIndex]:
    return [a for a in multi_indices(k, n) if sum(a) == n]


def binom(m: int, j: int) -> Fraction:
    """Generalized binomial ``m (m-1) ... (m-j+1) / j!``, valid for negative m."""
    if j < 0:
        return Fraction(0)
    if m >= 0:
        return Fraction(math.comb(m, j))
    # C(m, j) = (-1)^j C(j - m - 1, j)
    return Fraction((-1) ** j * math.comb(j - m - 1, j))


# ---------------------------------------------------------------------------
# Stirling numbers, filled on demand and shared by all threads


class _StirlingTable:
    def __init__(self, recurrence):
        self._rows: list[list[int]] = [[1]]
        self._recurrence = recurrence
        self._lock = threading.Lock()

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    m = len(self._rows)
                    self._rows.append([self._recurrence(prev, m, j) for j in range(m + 1)])
        return self._rows[n][k]


def _get(row, j):
    return row[j] if 0 <= j < len(row) else 0


# signed first kind: s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
stirling1 = _StirlingTable(lambda prev, n, k: _get(prev, k - 1) - (n - 1) * _get(prev, k))
# second kind: S(n, k) = S(n-1, k-1) + k S(n-1, k)
stirling2 = _StirlingTable(lambda prev, n, k: _get(prev, k - 1) + k * _get(prev, k))


# ---------------------------------------------------------------------------
# forms


def _clean(coeffs: Mapping[MultiIndex, object], k: int) -> tuple[tuple[MultiIndex, Scalar], ...]:
    items = []
    for alpha, value in coeffs.items():
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != k or any(a < 0 for a in alpha):
            raise InvalidInputError(f"multi-index {alpha} invalid for free rank {k}")
        value = Scalar.coerce(value)
        if value:
            items.append((alpha, value))
    items.sort(key=lambda item: graded_key(item[0]))
    return tuple(items)


class _Form:
    __slots__ = ("group", "_items", "_dict")

    def __init__(self, group: GroupDescriptor, coeffs: Mapping[MultiIndex, object] | None = None):
        if not group.is_discrete:
            raise InvalidInputError("polynomial forms live on the discrete part of the group")
        self.group = group
        merged: dict[MultiIndex, Scalar] = {}
        for alpha, value in (coeffs or {}).items():
            alpha = tuple(alpha)
            merged[alpha] = merged.get(alpha, ZERO) + Scalar.coerce(value)
        self._items = _clean(merged, group.free_rank)
        self._dict = dict(self._items)

    @property
    def k(self) -> int:
        return self.group.free_rank

    @property
    def coeffs(self) -> dict[MultiIndex, Scalar]:
        return dict(self._dict)

    def coeff(self, alpha: MultiIndex) -> Scalar:
        return self._dict.get(tuple(alpha), ZERO)

    def items(self) -> tuple[tuple[MultiIndex, Scalar], ...]:
        return self._items

    @property
    def degree(self) -> int | None:
        """Highest order with a nonzero coefficient; ``None`` for the zero polynomial."""
        if not self._items:
            return None
        return max(sum(a) for a, _ in self._items)

    def is_zero(self) -> bool:
        return not self._items

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.group.free_rank != self.group.free_rank:
            raise DescriptorMismatchError("forms on different free ranks")

    def _combine(self, other, sign):
        self._check(other)
        merged = dict(self._dict)
        for alpha, v in other._items:
            merged[alpha] = merged.get(alpha, ZERO) + (v if sign > 0 else -v)
        return self._rebuild(merged)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self._rebuild({a: -v for a, v in self._items})

    def __mul__(self, c):
        c = Scalar.coerce(c)
        return self._rebuild({a: v * c for a, v in self._items})

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Scalar.coerce(c)
        return self._rebuild({a: v / c for a, v in self._items})

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.group.free_rank == other.group.free_rank and self._items == other._items

    def __hash__(self):
        return hash((type(self).__name__, self.group.free_rank, self._items))

    def _rebuild(self, coeffs):
        raise NotImplementedError

    def _coords(self, t: GroupElement) -> tuple[int, ...]:
        if not isinstance(t, GroupElement):
            t = (t,) if isinstance(t, int) else tuple(t)
            if len(t) != self.k:
                raise DescriptorMismatchError("point has the wrong free rank")
            return t
        if t.descriptor.free_rank != self.k:
            raise DescriptorMismatchError("point has the wrong free rank")
        return t.free


class NewtonForm(_Form):
    """Polynomial given by its unit-direction iterated differences at the origin."""

    __slots__ = ("degree_bound",)

    def __init__(self, group: GroupDescriptor, degree_bound: int, coeffs: Mapping[MultiIndex, object] | None = None):
        super().__init__(group, coeffs)
        self.degree_bound = int(degree_bound)
        d = self.degree
        if d is not None and d > self.degree_bound:
            raise InvalidInputError(f"coefficient of order {d} exceeds degree bound {self.degree_bound}")

    def _rebuild(self, coeffs):
        return NewtonForm(self.group, self.degree_bound, coeffs)

    def _combine(self, other, sign):
        self._check(other)
        merged = dict(self._dict)
        for alpha, v in other._items:
            merged[alpha] = merged.get(alpha, ZERO) + (v if sign > 0 else -v)
        return NewtonForm(self.group, max(self.degree_bound, other.degree_bound), merged)

    def with_bound(self, n: int) -> NewtonForm:
        return NewtonForm(self.group, n, self._dict)

    def __call__(self, t) -> Scalar:
        return eval_newton(self, t)

    def as_function(self, group: GroupDescriptor | None = None) -> GroupFunction:
        g = group or self.group
        return GroupFunction(g, self, form=self)

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {v}" for a, v in self._items)
        return f"NewtonForm(k={self.k}, n={self.degree_bound}, {{{body}}})"


class MonomialForm(_Form):
    """Polynomial ``Σ_α c_α t^α`` in the coordinate functions."""

    __slots__ = ()

    def _rebuild(self, coeffs):
        return MonomialForm(self.group, coeffs)

    def __call__(self, t) -> Scalar:
        return eval_monomial(self, t)

    def as_function(self, group: GroupDescriptor | None = None) -> GroupFunction:
        return GroupFunction(group or self.group, self, form=self)

    def __mul__(self, other):
        if isinstance(other, MonomialForm):
            self._check(other)
            out: dict[MultiIndex, Scalar] = {}
            for a, x in self._items:
                for b, y in other._items:
                    ab = tuple(i + j for i, j in zip(a, b))
                    out[ab] = out.get(ab, ZERO) + x * y
            return MonomialForm(self.group, out)
        return super().__mul__(other)

    def __rmul__(self, c):
        return super().__mul__(c)

    def homogeneous_in(self) -> int | None:
        """The common order of all terms, or None when mixed (or zero)."""
        orders = {sum(a) for a, _ in self._items}
        return orders.pop() if len(orders) == 1 else None

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {v}" for a, v in self._items)
        return f"MonomialForm(k={self.k}, {{{body}}})"


def monomial(group: GroupDescriptor, alpha: MultiIndex, c=1) -> MonomialForm:
    return MonomialForm(group, {tuple(alpha): c})


# ---------------------------------------------------------------------------
# evaluation


def eval_newton(p: NewtonForm, t) -> Scalar:
    coords = p._coords(t)
    total = ZERO
    for alpha, value in p._items:
        w = Fraction(1)
        for x, a in zip(coords, alpha):
            w *= binom(x, a)
            if not w:
                break
        if w:
            total = total + value * w
    return total


def eval_monomial(q: MonomialForm, t) -> Scalar:
    coords = q._coords(t)
    total = ZERO
    for alpha, value in q._items:
        w = 1
        for x, a in zip(coords, alpha):
            w *= x**a
        total = total + value * w
    return total


def _free_element(group: GroupDescriptor, coords: Iterable[int]) -> GroupElement:
    return GroupElement(group, tuple(coords), (0,) * len(group.torsion_orders))


def newton_from_oracle(f: GroupFunction, n: int, check: bool = True, sample_radius: int | None = None) -> NewtonForm:
    """Sample ``Δ^α f(0)`` for |α| <= n.

    With ``check`` set, ``f`` must first pass :func:`degree_test` at level n,
    otherwise :class:`NotAPolynomialError` is raised.
    """
    g = f.descriptor
    if check and not degree_test(f, n, sample_radius):
        raise NotAPolynomialError(f"function fails the degree test at level {n}")
    k = g.free_rank
    cache: dict[tuple[int, ...], Scalar] = {}

    def value(coords):
        if coords not in cache:
            cache[coords] = f(_free_element(g, coords))
        return cache[coords]

    coeffs = {}
    for alpha in multi_indices(k, n):
        total = ZERO
        for beta in itertools.product(*(range(a + 1) for a in alpha)):
            sign = (-1) ** (sum(alpha) - sum(beta))
            w = math.prod(math.comb(a, b) for a, b in zip(alpha, beta))
            total = total + value(beta) * (sign * w)
        coeffs[alpha] = total
    return NewtonForm(g, n, coeffs)


# ---------------------------------------------------------------------------
# basis change


def _falling_to_powers(j: int) -> list[Fraction]:
    """Coefficients of x^i in C(x, j) = (1/j!) Σ_i s(j, i) x^i."""
    f = math.factorial(j)
    return [Fraction(stirling1(j, i), f) for i in range(j + 1)]


def newton_to_monomial(p: NewtonForm) -> MonomialForm:
    out: dict[MultiIndex, Scalar] = {}
    for alpha, value in p._items:
        factors = [_falling_to_powers(a) for a in alpha]
        for beta in itertools.product(*(range(a + 1) for a in alpha)):
            w = math.prod((fac[b] for fac, b in zip(factors, beta)), start=Fraction(1))
            if w:
                out[beta] = out.get(beta, ZERO) + value * w
    return MonomialForm(p.group, out)


def monomial_to_newton(q: MonomialForm, degree_bound: int | None = None) -> NewtonForm:
    """x^m = Σ_j S(m, j) j! C(x, j), coordinatewise."""
    out: dict[MultiIndex, Scalar] = {}
    for alpha, value in q._items:
        for beta in itertools.product(*(range(a + 1) for a in alpha)):
            w = math.prod(stirling2(a, b) * math.factorial(b) for a, b in zip(alpha, beta))
            if w:
                out[beta] = out.get(beta, ZERO) + value * w
    d = q.degree
    n = degree_bound if degree_bound is not None else (0 if d is None else d)
    return NewtonForm(q.group, n, out)


# ---------------------------------------------------------------------------
# structure


def homogeneous_parts(p: NewtonForm) -> list[MonomialForm]:
    """``[a_0, ..., a_n]`` with ``a_j`` the order-j part of p; ``a_j(m t) = m^j a_j(t)``."""
    mono = newton_to_monomial(p)
    parts: list[dict] = [{} for _ in range(p.degree_bound + 1)]
    for alpha, value in mono.items():
        parts[sum(alpha)][alpha] = value
    return [MonomialForm(p.group, part) for part in parts]


def leading_coefficient(p: NewtonForm, s: GroupElement, t: GroupElement | None = None) -> Scalar:
    """``Δ_s^n p(t) / n!`` with n the degree bound: the coefficient of m^n in p(t + m s).

    The value does not depend on ``t``.
    """
    f = p.as_function(s.descriptor)
    if t is None:
        t = s.descriptor.zero()
    n = p.degree_bound
    return iterated_delta(f, s, n, t) / math.factorial(n)


def degree_reduce_check(p: NewtonForm, k: int) -> bool:
    """Whether ``p(m s) = m^k p(s)`` identically; if so, deg p <= k.

    Checked on the monomial form: the identity holds exactly when every
    nonzero monomial has order k.
    """
    if not 0 <= k < p.degree_bound:
        raise ValueError(f"need 0 <= k < degree bound {p.degree_bound}, got {k}")
    mono = newton_to_monomial(p)
    return all(sum(alpha) == k for alpha, _ in mono.items())


def tensor_product(q: NewtonForm, r: NewtonForm, group: GroupDescriptor | None = None) -> NewtonForm:
    """The form ``(s, t) -> q(s) r(t)`` on Z^(k1 + k2); the Newton basis is a product basis."""
    g = group or GroupDescriptor(q.k + r.k)
    out = {}
    for a, x in q.items():
        for b, y in r.items():
            out[a + b] = x * y
    return NewtonForm(g, q.degree_bound + r.degree_bound, out)
