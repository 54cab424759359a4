"""Finitely generated abelian groups Z^k x Z_d1 x ... x Z_dr, their points and subsemigroups.

A descriptor may also carry a formal real rank ``m`` standing for an R^m factor.
That factor only enters dimension counts; elements of such a descriptor cannot
be built.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import (
    DescriptorMismatchError,
    InvalidInputError,
    RealRankElementError,
    SearchBoundExceededError,
)


@dataclass(frozen=True)
class GroupDescriptor:
    free_rank: int = 0
    torsion_orders: tuple[int, ...] = ()
    formal_real_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion_orders", tuple(int(d) for d in self.torsion_orders))
        if self.free_rank < 0 or self.formal_real_rank < 0:
            raise InvalidInputError("ranks must be non-negative")
        if any(d < 2 for d in self.torsion_orders):
            raise InvalidInputError(f"torsion orders must be >= 2, got {self.torsion_orders}")

    @property
    def is_discrete(self) -> bool:
        return self.formal_real_rank == 0

    @property
    def torsion_size(self) -> int:
        return math.prod(self.torsion_orders)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0 and self.formal_real_rank == 0

    def element(self, free: Sequence[int] = (), torsion: Sequence[int] | None = None) -> GroupElement:
        if torsion is None:
            torsion = (0,) * len(self.torsion_orders)
        return GroupElement(self, tuple(free), tuple(torsion))

    def zero(self) -> GroupElement:
        return self.element((0,) * self.free_rank)

    def free_unit(self, i: int) -> GroupElement:
        return self.element(tuple(int(j == i) for j in range(self.free_rank)))

    def torsion_unit(self, i: int) -> GroupElement:
        return self.element(
            (0,) * self.free_rank, tuple(int(j == i) for j in range(len(self.torsion_orders)))
        )

    def generators(self) -> list[GroupElement]:
        """Free unit vectors followed by torsion unit residues."""
        return [self.free_unit(i) for i in range(self.free_rank)] + [
            self.torsion_unit(i) for i in range(len(self.torsion_orders))
        ]

    def torsion_residues(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(d) for d in self.torsion_orders))

    def box(self, lo: int, hi: int) -> Iterator[GroupElement]:
        """All elements with free coordinates in [lo, hi] and arbitrary torsion."""
        for free in itertools.product(range(lo, hi + 1), repeat=self.free_rank):
            for tor in self.torsion_residues():
                yield GroupElement(self, free, tor)

    def free_part(self) -> GroupDescriptor:
        return GroupDescriptor(self.free_rank)


@dataclass(frozen=True)
class GroupElement:
    descriptor: GroupDescriptor = field(repr=False)
    free: tuple[int, ...] = ()
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        g = self.descriptor
        if not g.is_discrete:
            raise RealRankElementError("elements of a group with a formal real factor cannot be constructed")
        if len(self.free) != g.free_rank or len(self.torsion) != len(g.torsion_orders):
            raise InvalidInputError(
                f"element shape ({len(self.free)}, {len(self.torsion)}) does not match "
                f"group ({g.free_rank}, {len(g.torsion_orders)})"
            )
        object.__setattr__(self, "free", tuple(int(x) for x in self.free))
        object.__setattr__(
            self, "torsion", tuple(int(x) % d for x, d in zip(self.torsion, g.torsion_orders))
        )

    def _check(self, other: GroupElement) -> None:
        if not isinstance(other, GroupElement) or other.descriptor != self.descriptor:
            raise DescriptorMismatchError("elements belong to different groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(
            self.descriptor,
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __neg__(self) -> GroupElement:
        return GroupElement(self.descriptor, tuple(-a for a in self.free), tuple(-a for a in self.torsion))

    def __sub__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self + (-other)

    def __rmul__(self, m: int) -> GroupElement:
        if not isinstance(m, int):
            return NotImplemented
        return GroupElement(self.descriptor, tuple(m * a for a in self.free), tuple(m * a for a in self.torsion))

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    return a + b


def scalar_mul(m: int, a: GroupElement) -> GroupElement:
    return m * a


@dataclass(frozen=True)
class SemigroupDescriptor:
    """A subsemigroup J of a discrete group with J - J = G.

    ``kind`` is one of ``"full_group"``, ``"standard_orthant"`` (all free
    coordinates non-negative, torsion arbitrary) or ``"generator_list"``
    (non-negative integer combinations of ``generators``).
    """

    ambient: GroupDescriptor
    kind: str = "standard_orthant"
    generators: tuple[GroupElement, ...] = ()

    KINDS = ("full_group", "standard_orthant", "generator_list")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InvalidInputError(f"unknown semigroup kind {self.kind!r}")
        if not self.ambient.is_discrete:
            raise RealRankElementError("semigroups live in the discrete part only")
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.descriptor != self.ambient:
                raise DescriptorMismatchError("generator outside the ambient group")
        if self.kind != "generator_list" and self.generators:
            raise InvalidInputError("generators are only meaningful for generator_list semigroups")

    def contains(self, t: GroupElement) -> bool:
        return semigroup_contains(self, t)

    def probe_points(self, reach: int) -> list[GroupElement]:
        """Elements of J near the origin: combinations with coefficients up to ``reach``."""
        g = self.ambient
        if self.kind == "full_group":
            return list(g.box(-reach, reach))
        if self.kind == "standard_orthant":
            return list(g.box(0, reach))
        seen: dict[GroupElement, None] = {}
        for coeffs in itertools.product(range(reach + 1), repeat=len(self.generators)):
            t = g.zero()
            for c, gen in zip(coeffs, self.generators):
                t = t + c * gen
            seen.setdefault(t)
        return list(seen)


def orthant(group: GroupDescriptor) -> SemigroupDescriptor:
    return SemigroupDescriptor(group, "standard_orthant")


def _element_order(g: GroupElement) -> int:
    order = 1
    for x, d in zip(g.torsion, g.descriptor.torsion_orders):
        order = math.lcm(order, d // math.gcd(x, d))
    return order


def _positive_functional(gens: Sequence[GroupElement]) -> tuple[int, ...] | None:
    """A small integer functional strictly positive on the free parts of ``gens``, if one exists."""
    k = gens[0].descriptor.free_rank if gens else 0
    for phi in itertools.product((-1, 0, 1, 2, -2), repeat=k):
        if all(sum(a * b for a, b in zip(phi, g.free)) > 0 for g in gens):
            return phi
    return None


def semigroup_contains(J: SemigroupDescriptor, t: GroupElement) -> bool:
    """Membership of ``t`` in ``J``.

    For generator lists the coefficient vectors are searched exhaustively up to
    ``(1 + max|t_i|) * len(generators)``. When nothing is found and no
    positivity argument shows the search was complete,
    :class:`SearchBoundExceededError` is raised instead of answering ``False``.
    """
    if t.descriptor != J.ambient:
        raise DescriptorMismatchError("point outside the semigroup's ambient group")
    if J.kind == "full_group":
        return True
    if J.kind == "standard_orthant":
        return all(x >= 0 for x in t.free)
    if t.is_zero():
        return True
    gens = list(J.generators)
    if not gens:
        return False
    bound = (1 + max((abs(x) for x in t.free), default=0)) * len(gens)

    # Shrink each coefficient range to one that provably suffices, when possible;
    # ``complete`` records whether the resulting search decides membership.
    caps = [bound] * len(gens)
    complete = True
    free_idx = [i for i, g in enumerate(gens) if any(g.free)]
    for i, g in enumerate(gens):
        if i not in free_idx:
            need = _element_order(g) - 1
            if need <= bound:
                caps[i] = need
            else:
                complete = False
    if not free_idx:
        if any(t.free):
            return False
    else:
        phi = _positive_functional([gens[i] for i in free_idx])
        if phi is None:
            complete = False
        else:
            target = sum(a * b for a, b in zip(phi, t.free))
            for i in free_idx:
                need = target // sum(a * b for a, b in zip(phi, gens[i].free)) if target > 0 else 0
                if need <= bound:
                    caps[i] = need
                else:
                    complete = False

    zero = J.ambient.zero()
    for coeffs in itertools.product(*(range(c + 1) for c in caps)):
        s = zero
        for c, g in zip(coeffs, gens):
            if c:
                s = s + c * g
        if s == t:
            return True
    if complete:
        return False
    raise SearchBoundExceededError(
        f"membership of {t.free}/{t.torsion} undecided within coefficient bound {bound}"
    )


def orthant_decompose(t: GroupElement) -> tuple[GroupElement, GroupElement]:
    """Split ``t = u - v`` with ``u, v`` in the standard orthant."""
    g = t.descriptor
    u = GroupElement(g, tuple(max(x, 0) for x in t.free), t.torsion)
    v = GroupElement(g, tuple(max(-x, 0) for x in t.free), (0,) * len(t.torsion))
    return u, v


@dataclass(frozen=True)
class H0Subgroup:
    """The common kernel of all homomorphisms G -> R; for Z^k x F this is {0} x F."""

    ambient: GroupDescriptor

    def contains(self, t: GroupElement) -> bool:
        if t.descriptor != self.ambient:
            raise DescriptorMismatchError("point outside the ambient group")
        return not any(t.free)

    @property
    def order(self) -> int:
        return self.ambient.torsion_size

    def elements(self) -> list[GroupElement]:
        zeros = (0,) * self.ambient.free_rank
        return [GroupElement(self.ambient, zeros, tor) for tor in self.ambient.torsion_residues()]


def h0_subgroup(G: GroupDescriptor) -> H0Subgroup:
    if not G.is_discrete:
        raise RealRankElementError("H_0 is only computed for discrete groups")
    return H0Subgroup(G)


def project_mod_h0(G: GroupDescriptor, t: GroupElement) -> GroupElement:
    """Canonical projection G -> G/H_0, with G/H_0 represented as Z^k."""
    if t.descriptor != G:
        raise DescriptorMismatchError("point outside the given group")
    return GroupElement(G.free_part(), t.free, ())
