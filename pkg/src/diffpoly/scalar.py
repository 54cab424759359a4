"""Exact Gaussian rationals."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import InvalidInputError

ScalarLike = Union["Scalar", int, Fraction]

_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class Scalar:
    """A complex number ``re + im*i`` with both parts exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value: ScalarLike) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact; build a Scalar explicitly")
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot interpret {value!r} as a Scalar")

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> Scalar:
        return Scalar(self.re, -self.im)

    def __add__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Scalar(self.re * other, self.im * other)
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar(self.re / other, self.im / other)
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("Scalar division by zero")
        return self * Scalar(o.re / norm, -o.im / norm)

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __neg__(self) -> Scalar:
        return Scalar(-self.re, -self.im)

    def __pos__(self) -> Scalar:
        return self

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def format_scalar(value: ScalarLike) -> str:
    """Canonical text form: ``"a/b"`` or ``"a/b+c/di"``; lowest terms, sign on the numerator."""
    s = Scalar.coerce(value)
    if s.im == 0:
        return str(s.re)
    sign = "+" if s.im > 0 else "-"
    return f"{s.re}{sign}{abs(s.im)}i"


def parse_scalar(text: str) -> Scalar:
    """Inverse of :func:`format_scalar`; also accepts ``"3i"``, ``"-i"`` and a space before ``i``."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Scalar(text)
    if not isinstance(text, str):
        raise InvalidInputError(f"scalar must be a string, got {text!r}")
    body = text.replace(" ", "")
    if not body.endswith("i"):
        return Scalar(_parse_rational(body, text))
    body = body[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut > 0:
        re_text, im_text = body[:cut], body[cut:]
    else:
        re_text, im_text = "0", body
    if im_text in ("", "+", "-"):
        im_text += "1"
    return Scalar(_parse_rational(re_text, text), _parse_rational(im_text, text))


def _parse_rational(part: str, original: str) -> Fraction:
    if not _RAT_RE.match(part):
        raise InvalidInputError(f"cannot parse scalar {original!r}")
    _, _, den = part.partition("/")
    if den and int(den) == 0:
        raise InvalidInputError(f"zero denominator in {original!r}")
    return Fraction(part)
