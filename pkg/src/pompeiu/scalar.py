"""Exact Gaussian rationals a + b*i with a, b in Q."""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational


def _normalize(x):
    if type(x) is int:
        return x
    if isinstance(x, bool):
        return int(x)
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


class Scalar:
    """Gaussian rational; treat as immutable. Parts are int or reduced `Fraction`."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        # integral parts are held as int: much cheaper than Fraction arithmetic
        self.re = _normalize(re)
        self.im = _normalize(im)

    @classmethod
    def _make(cls, re, im):
        z = object.__new__(cls)
        z.re = re.numerator if type(re) is Fraction and re.denominator == 1 else re
        z.im = im.numerator if type(im) is Fraction and im.denominator == 1 else im
        return z

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if type(value) is int:
            return cls._make(value, 0)
        if isinstance(value, (int, Rational)):
            return cls(value)
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar._make(self.re * o.re, 0)
        return Scalar._make(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar(Fraction(self.re) / n, Fraction(-self.im) / n)

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    def norm(self):
        """|z|^2, exact."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def format_scalar(z: Scalar) -> str:
    """Exact text form: "p/q" for reals, "p/q+r/s·i" otherwise."""
    if z.im == 0:
        return str(z.re)
    im = z.im
    sign = "-" if im < 0 else "+"
    if z.re == 0:
        return f"{'-' if im < 0 else ''}{abs(im)}·i"
    return f"{z.re}{sign}{abs(im)}·i"


_SCALAR_RE = re.compile(
    r"^\s*(?:(?P<re>[+-]?\d+(?:/\d+)?)(?=$|\s*[+-]))?"
    r"\s*(?:(?P<im>[+-]?\s*(?:\d+(?:/\d+)?)?)\s*(?:·|\*)?\s*i)?\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Inverse of `format_scalar`; also accepts "*i" and a bare "i"."""
    m = _SCALAR_RE.match(text)
    if not m or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_text = m.group("im")
    if im_text is None:
        im_part = Fraction(0)
    else:
        im_text = im_text.replace(" ", "")
        if im_text in ("", "+"):
            im_part = Fraction(1)
        elif im_text == "-":
            im_part = Fraction(-1)
        else:
            im_part = Fraction(im_text)
    return Scalar(re_part, im_part)
