"""Exact complex scalars with rational real and imaginary parts."""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["GaussianRational", "ScalarParseError", "parse_scalar", "as_scalar", "ZERO", "ONE", "I"]


class ScalarParseError(ValueError):
    pass


class GaussianRational:
    """The number ``(a + b*i) / d`` stored with ``d > 0`` and ``gcd(a, b, d) == 1``.

    A single shared denominator keeps multiplication to a handful of integer
    products and one gcd. ``real`` and ``imag`` expose the parts as reduced
    :class:`~fractions.Fraction` values.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, real=0, imag=0):
        re_ = Fraction(real)
        im_ = Fraction(imag)
        d = re_.denominator * im_.denominator // gcd(re_.denominator, im_.denominator)
        a = re_.numerator * (d // re_.denominator)
        b = im_.numerator * (d // im_.denominator)
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        # caller guarantees d != 0
        if d < 0:
            a, b, d = -a, -b, -d
        if d != 1:
            g = gcd(gcd(a, b), d)
            if g != 1:
                a //= g
                b //= g
                d //= g
        if a == 0 and b == 0:
            d = 1
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    # -- parts -------------------------------------------------------------
    @property
    def real(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._b, self._d)

    def conjugate(self) -> "GaussianRational":
        if self._b == 0:
            return self
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """``|z|**2`` as an exact rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o._a and not o._b:
            return self
        if not self._a and not self._b:
            return o
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        if b1 == 0 and b2 == 0:
            return GaussianRational._raw(a1 * a2, 0, self._d * o._d)
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        # d / (a + bi) = d (a - bi) / n
        return GaussianRational._raw(d * a, -d * b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((Fraction(self._a, self._d), Fraction(self._b, self._d)))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Rational):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return None


def as_scalar(x) -> GaussianRational:
    """Coerce ints, Fractions, literals and GaussianRationals to a GaussianRational."""
    if isinstance(x, str):
        return parse_scalar(x)
    o = _coerce(x)
    if o is None:
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact; pass a literal string")
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")
    return o


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)

_RAT = r"\d+(?:/\d+)?"
_LITERAL = re.compile(
    rf"""^\s*(?:
        (?P<re>[+-]?{_RAT})(?:(?P<isign>[+-])(?P<im>{_RAT})?i)?   # real, optional imag
      | (?P<osign>[+-]?)(?P<only>{_RAT})?i                         # imaginary only
    )\s*$""",
    re.VERBOSE,
)


def _rat(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> GaussianRational:
    """Parse a literal such as ``"-3"``, ``"3/4"``, ``"2i"``, ``"i"`` or ``"1/2-3/4i"``.

    Unreduced fractions are accepted and canonicalized.
    """
    if not isinstance(text, str):
        raise ScalarParseError(f"scalar literal must be a string, got {type(text).__name__}")
    m = _LITERAL.match(text)
    if m is None:
        raise ScalarParseError(f"malformed scalar literal {text!r}")
    if m.group("re") is not None:
        re_ = _rat(m.group("re"))
        im_ = Fraction(0)
        if m.group("isign"):
            im_ = _rat(m.group("im")) if m.group("im") else Fraction(1)
            if m.group("isign") == "-":
                im_ = -im_
        return GaussianRational(re_, im_)
    im_ = _rat(m.group("only")) if m.group("only") else Fraction(1)
    if m.group("osign") == "-":
        im_ = -im_
    return GaussianRational(0, im_)


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(z: GaussianRational) -> str:
    re_, im_ = z.real, z.imag
    if im_ == 0:
        return _fmt_rat(re_)
    mag = abs(im_)
    imag_txt = "i" if mag == 1 else f"{_fmt_rat(mag)}i"
    if re_ == 0:
        return ("-" if im_ < 0 else "") + imag_txt
    return f"{_fmt_rat(re_)}{'-' if im_ < 0 else '+'}{imag_txt}"
