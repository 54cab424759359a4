"""Difference operators on group functions and the finite-difference identities.

Throughout, ``Δ_h f(t) = f(t + h) - f(t)`` and the iterated difference is

    Δ_s^m f(t) = Σ_j (-1)^(m-j) C(m, j) f(t + j s).

Printed with the sign ``(-1)^j`` instead, the sum differs by ``(-1)^m`` and
gives ``f(t) - f(t + s)`` for ``m = 1``; the convention above is the one that
agrees with the forward-shift expansion and the backward formula.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable

import numpy as np

from .errors import DescriptorMismatchError, PointNotInTableError
from .groups import GroupDescriptor, GroupElement
from .scalar import ZERO, Scalar


class GroupFunction:
    """A deterministic oracle ``GroupElement -> Scalar`` on a fixed group.

    ``form`` optionally records a finite polynomial representation backing the
    oracle (for example a ``NewtonForm``), which lets some checks run exactly.
    """

    def __init__(self, descriptor: GroupDescriptor, rule: Callable[[GroupElement], Any], form=None):
        self.descriptor = descriptor
        self._rule = rule
        self.form = form

    def __call__(self, t: GroupElement) -> Scalar:
        if t.descriptor != self.descriptor:
            raise DescriptorMismatchError("point outside the function's group")
        return Scalar.coerce(self._rule(t))

    def __add__(self, other: GroupFunction) -> GroupFunction:
        _same_group(self, other)
        return GroupFunction(self.descriptor, lambda t: self(t) + other(t))

    def __sub__(self, other: GroupFunction) -> GroupFunction:
        _same_group(self, other)
        return GroupFunction(self.descriptor, lambda t: self(t) - other(t))

    def __rmul__(self, c) -> GroupFunction:
        c = Scalar.coerce(c)
        return GroupFunction(self.descriptor, lambda t: c * self(t))

    def __repr__(self) -> str:
        return f"GroupFunction({self.descriptor}, form={self.form!r})"


def _same_group(f: GroupFunction, g: GroupFunction) -> None:
    if f.descriptor != g.descriptor:
        raise DescriptorMismatchError("functions live on different groups")


def constant(descriptor: GroupDescriptor, c) -> GroupFunction:
    c = Scalar.coerce(c)
    return GroupFunction(descriptor, lambda t: c)


def from_table(descriptor: GroupDescriptor, table: dict[GroupElement, Any]) -> GroupFunction:
    values = {k: Scalar.coerce(v) for k, v in table.items()}

    def rule(t):
        try:
            return values[t]
        except KeyError:
            raise PointNotInTableError(f"no table value at free={t.free} torsion={t.torsion}") from None

    return GroupFunction(descriptor, rule)


def delta(f: GroupFunction, h: GroupElement) -> GroupFunction:
    """The function ``t -> f(t + h) - f(t)``."""
    if h.descriptor != f.descriptor:
        raise DescriptorMismatchError("step outside the function's group")
    return GroupFunction(f.descriptor, lambda t: f(t + h) - f(t))


def iterated_delta(f: GroupFunction, s: GroupElement, m: int, t: GroupElement) -> Scalar:
    """``Δ_s^m f(t)`` by the closed alternating sum (m + 1 evaluations)."""
    if m < 0:
        raise ValueError("order must be non-negative")
    if s.descriptor != f.descriptor:
        raise DescriptorMismatchError("step outside the function's group")
    total = ZERO
    point = t
    for j in range(m + 1):
        c = math.comb(m, j)
        term = f(point) * c
        total = total + term if (m - j) % 2 == 0 else total - term
        point = point + s
    return total


def shift_expand(f: GroupFunction, t: GroupElement, s: GroupElement, m: int, n_bound: int | None = None) -> Scalar:
    """Forward expansion ``Σ_{j<=min(m,n)} C(m, j) Δ_s^j f(t)``; equals ``f(t + m s)`` for f in P^n."""
    if m < 0:
        raise ValueError("m must be non-negative")
    top = m if n_bound is None else min(m, n_bound)
    total = ZERO
    for j in range(top + 1):
        total = total + iterated_delta(f, s, j, t) * math.comb(m, j)
    return total


def backward_eval(f: GroupFunction, t: GroupElement, s: GroupElement, n: int) -> Scalar:
    """``Σ_{j<=n} (-1)^j Δ_s^j f(t)``, which equals ``f(t - s)`` whenever f is in P^n.

    Only forward points ``t + j s`` are evaluated. For f outside P^n the result
    is meaningless; nothing checks this.
    """
    # collapsed double sum: f(t + i s) carries (-1)^i Σ_{j=i..n} C(j, i) = (-1)^i C(n+1, i+1)
    total = ZERO
    point = t
    for i in range(n + 1):
        coeff = math.comb(n + 1, i + 1) * (-1) ** i
        total = total + f(point) * coeff
        point = point + s
    return total


def mixed_difference(f: GroupFunction, steps: list[GroupElement], t: GroupElement) -> Scalar:
    """``Δ_{h_1} ... Δ_{h_r} f(t)`` by inclusion-exclusion over subsets of ``steps``."""
    r = len(steps)
    zero = f.descriptor.zero()
    total = ZERO
    for mask in itertools.product((0, 1), repeat=r):
        offset = reduce(lambda acc, pair: acc + pair[1] if pair[0] else acc, zip(mask, steps), zero)
        term = f(t + offset)
        total = total + term if (r - sum(mask)) % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# degree test


def _grid_values(f: GroupFunction, lo: int, hi: int) -> np.ndarray:
    """Values of f on free coordinates [lo, hi]^k times all torsion residues, as an object array."""
    g = f.descriptor
    shape = (hi - lo + 1,) * g.free_rank + g.torsion_orders
    out = np.empty(shape, dtype=object)
    for idx in np.ndindex(*shape):
        free = tuple(i + lo for i in idx[: g.free_rank])
        out[idx] = f(GroupElement(g, free, idx[g.free_rank:]))
    return out


def _integer_parts(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Scale real and imaginary parts to integers by a common denominator (zero-tests are unaffected)."""
    flat = values.ravel()
    den = 1
    for v in flat:
        den = math.lcm(den, v.re.denominator, v.im.denominator)
    re = np.empty(values.shape, dtype=object)
    im = np.empty(values.shape, dtype=object)
    for idx, v in np.ndenumerate(values):
        re[idx] = v.re.numerator * (den // v.re.denominator)
        im[idx] = v.im.numerator * (den // v.im.denominator)
    return re, im


def _difference_tables(arr: np.ndarray, free_rank: int, order: int):
    """Yield ``(alpha, Δ^alpha arr)`` for every generator multi-index of the given order.

    Free axes use forward differences (the array shrinks), torsion axes use
    cyclic differences. Intermediate tables are shared along a prefix tree.
    """
    naxes = arr.ndim

    def diff(a, axis):
        if axis < free_rank:
            return np.diff(a, axis=axis)
        return np.roll(a, -1, axis=axis) - a

    def walk(a, start, remaining, alpha):
        if remaining == 0:
            yield tuple(alpha), a
            return
        for axis in range(start, naxes):
            alpha[axis] += 1
            yield from walk(diff(a, axis), axis, remaining - 1, alpha)
            alpha[axis] -= 1

    yield from walk(arr, 0, order, [0] * naxes)


def probe_differences(values: np.ndarray, free_rank: int, order: int, radius: int, lo: int):
    """Every mixed generator difference of ``order`` restricted to points with free coords in [-radius, radius]."""
    for alpha, table in _difference_tables(values, free_rank, order):
        start = -radius - lo
        index = tuple(slice(start, start + 2 * radius + 1) for _ in range(free_rank))
        yield alpha, table[index]


def degree_test(f: GroupFunction, n: int, sample_radius: int | None = None, exact: bool = True) -> bool:
    """True iff every mixed generator difference of order n + 1 vanishes on the probe box.

    Steps range over free unit vectors and torsion unit residues; base points
    over free coordinates in [-r, r] (``r`` defaults to n + 2) with all torsion
    residues. For an opaque oracle this is a certificate on the probe set only.
    When ``exact`` is set and ``f`` is backed by a polynomial form, the form's
    degree is used instead.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    form = getattr(f, "form", None)
    if exact and form is not None and hasattr(form, "degree"):
        d = form.degree
        return d is None or d <= n
    r = n + 2 if sample_radius is None else sample_radius
    if r < 1:
        raise ValueError("sample_radius must be >= 1")
    g = f.descriptor
    lo, hi = -r, r + n + 1
    values = _grid_values(f, lo, hi)
    re, im = _integer_parts(values)
    for part in (re, im):
        for _, table in probe_differences(part, g.free_rank, n + 1, r, lo):
            if any(x != 0 for x in table.ravel()):
                return False
    return True


# ---------------------------------------------------------------------------
# binomial identities


@dataclass
class IdentityReport:
    ok: bool
    checked: int
    failure: dict | None = field(default=None)

    def as_dict(self) -> dict:
        out = {"status": "ok" if self.ok else "failed", "checked": self.checked}
        if self.failure is not None:
            out["failure"] = self.failure
        return out


def backward_coefficient_sum(m: int, k: int) -> int:
    """``Σ_{i=k}^{m} (-1)^i C(m+1, i+1) C(i, k)``; equals ``(-1)^k``."""
    return sum((-1) ** i * math.comb(m + 1, i + 1) * math.comb(i, k) for i in range(k, m + 1))


def power_difference_sum(n: int, k: int) -> int:
    """``Σ_j (-1)^(n-j) C(n, j) j^k`` with ``0^0 = 1``; equals ``n! δ_{k,n}`` for k <= n."""
    return sum((-1) ** (n - j) * math.comb(n, j) * j**k for j in range(n + 1))


def verify_binomial_identities(max_m: int) -> IdentityReport:
    """Check both coefficient identities for all 0 <= k <= m <= max_m."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    checked = 0
    for m in range(max_m + 1):
        for k in range(m + 1):
            got = backward_coefficient_sum(m, k)
            checked += 1
            if got != (-1) ** k:
                return IdentityReport(False, checked, {"identity": "backward", "m": m, "k": k, "value": got})
            got = power_difference_sum(m, k)
            want = math.factorial(m) if k == m else 0
            checked += 1
            if got != want:
                return IdentityReport(False, checked, {"identity": "power", "n": m, "k": k, "value": got})
    return IdentityReport(True, checked)
