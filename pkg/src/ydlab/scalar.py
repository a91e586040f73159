"""Exact Gaussian rationals: elements re + im*i with re, im in Q."""

from fractions import Fraction


class DivisionByZero(ArithmeticError):
    pass


def _rat(x):
    # ints stay ints (fast path); Fractions collapse to int when integral
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    if isinstance(x, str):
        return _rat(Fraction(x))
    raise TypeError("not a rational: %r" % (x,))


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


class Scalar:
    """An element of Q(i). Immutable; integral parts are kept as ints."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _rat(re))
        object.__setattr__(self, "im", _rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def _raw(re, im):
        s = object.__new__(Scalar)
        object.__setattr__(s, "re", _norm(re))
        object.__setattr__(s, "im", _norm(im))
        return s

    # field operations

    def __add__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return Scalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return Scalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return Scalar._raw(a * c, 0)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        a, b = self.re, self.im
        n = a * a + b * b
        if n == 0:
            raise DivisionByZero("inverse of zero")
        return Scalar._raw(Fraction(a) / n, Fraction(-b) / n)

    def __truediv__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def conjugate(self):
        return Scalar._raw(self.re, -self.im)

    # comparisons and hashing

    def __eq__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_real(self):
        return self.im == 0

    def norm2(self):
        """|x|^2 as a rational."""
        return self.re * self.re + self.im * self.im

    def __str__(self):
        re = "%s/%s" % (Fraction(self.re).numerator, Fraction(self.re).denominator)
        if self.im == 0:
            return re
        im = Fraction(self.im)
        sign = "-" if im < 0 else "+"
        return "%s%s%s/%s*i" % (re, sign, abs(im.numerator), im.denominator)

    def __repr__(self):
        return "Scalar(%s)" % (self,)

    @classmethod
    def parse(cls, text):
        """Inverse of str(): accepts 'a/b' or 'a/b+c/d*i'."""
        text = text.strip()
        if not text.endswith("*i"):
            return cls(Fraction(text), 0)
        body = text[:-2]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            return cls(0, Fraction(body))
        return cls(Fraction(body[:cut]), Fraction(body[cut:]))


def coerce(x):
    if type(x) is Scalar:
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar._raw(x, 0)
    return NotImplemented


def scalar(x=0, im=0):
    """Build a Scalar from ints, Fractions, strings or an existing Scalar."""
    if isinstance(x, Scalar) and im == 0:
        return x
    if isinstance(x, str):
        return Scalar.parse(x)
    return Scalar(x, im)


def conjugate(x):
    return coerce(x).conjugate()


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
