"""Exact complex-rational scalars.

Everything symbolic in this package (generator coefficients, structure
constants, the atomic-number formula) is computed over Q(i): complex numbers
whose real and imaginary parts are arbitrary-precision rationals.  No
rounding ever happens here; floating point enters only when forms are
turned into matrices.

>>> CRat(1, 2) * CRat(1, -2)
CRat(5)
>>> CRat.imag_unit() ** 2
CRat(-1)
"""

from __future__ import annotations

from fractions import Fraction


class CRat:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        # Fraction accepts int, Fraction, str like "1/2"; floats are refused
        # because nothing in the exact layer may ever round
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("CRat parts must be exact (int, Fraction, str)")
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("CRat is immutable")

    @staticmethod
    def imag_unit() -> "CRat":
        return CRat(0, 1)

    @staticmethod
    def coerce(x) -> "CRat":
        if isinstance(x, CRat):
            return x
        return CRat(x)

    # -- arithmetic ---------------------------------------------------------

    _COERCIBLE = (int, Fraction)

    def __add__(self, other):
        if type(other) is not CRat:
            if not isinstance(other, CRat._COERCIBLE):
                return NotImplemented
            other = CRat.coerce(other)
        out = object.__new__(CRat)
        object.__setattr__(out, "re", self.re + other.re)
        object.__setattr__(out, "im", self.im + other.im)
        return out

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not CRat:
            if not isinstance(other, CRat._COERCIBLE):
                return NotImplemented
            other = CRat.coerce(other)
        out = object.__new__(CRat)
        object.__setattr__(out, "re", self.re - other.re)
        object.__setattr__(out, "im", self.im - other.im)
        return out

    def __rsub__(self, other):
        if not isinstance(other, (CRat,) + CRat._COERCIBLE):
            return NotImplemented
        return CRat.coerce(other) - self

    def __mul__(self, other):
        if type(other) is not CRat:
            if not isinstance(other, CRat._COERCIBLE):
                return NotImplemented
            other = CRat.coerce(other)
        out = object.__new__(CRat)
        object.__setattr__(out, "re", self.re * other.re - self.im * other.im)
        object.__setattr__(out, "im", self.re * other.im + self.im * other.re)
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (CRat,) + CRat._COERCIBLE):
            return NotImplemented
        other = CRat.coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero CRat")
        return CRat(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        if not isinstance(other, (CRat,) + CRat._COERCIBLE):
            return NotImplemented
        return CRat.coerce(other) / self

    def __neg__(self):
        return CRat(-self.re, -self.im)

    def __pow__(self, k: int):
        out = CRat(1)
        base = self
        if k < 0:
            base = CRat(1) / base
            k = -k
        for _ in range(k):
            out = out * base
        return out

    def conj(self) -> "CRat":
        return CRat(self.re, -self.im)

    # -- predicates / conversions -------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CRat)):
            other = CRat.coerce(other)
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"CRat({self.re})"
        return f"CRat({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = CRat.imag_unit()

ZERO = CRat(0)
ONE = CRat(1)
HALF = CRat(Fraction(1, 2))


class Q2:
    """An element a + b*sqrt(2) of Q(i, sqrt(2)), with a, b in Q(i).

    Just enough field arithmetic for the rank-1 Cartan-basis check, where
    the normalization constant v = sqrt(2) makes roots like 1/sqrt(2) exact.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", CRat.coerce(a))
        object.__setattr__(self, "b", CRat.coerce(b))

    def __setattr__(self, name, value):
        raise AttributeError("Q2 is immutable")

    @staticmethod
    def coerce(x) -> "Q2":
        if isinstance(x, Q2):
            return x
        return Q2(CRat.coerce(x))

    @staticmethod
    def sqrt2() -> "Q2":
        return Q2(0, 1)

    _COERCIBLE = (int, Fraction, CRat)

    def __add__(self, other):
        if not isinstance(other, (Q2,) + Q2._COERCIBLE):
            return NotImplemented
        other = Q2.coerce(other)
        return Q2(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Q2,) + Q2._COERCIBLE):
            return NotImplemented
        other = Q2.coerce(other)
        return Q2(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        if not isinstance(other, (Q2,) + Q2._COERCIBLE):
            return NotImplemented
        return Q2.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Q2,) + Q2._COERCIBLE):
            return NotImplemented
        other = Q2.coerce(other)
        return Q2(
            self.a * other.a + CRat(2) * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (Q2,) + Q2._COERCIBLE):
            return NotImplemented
        other = Q2.coerce(other)
        # 1/(a+b*s2) = (a-b*s2)/(a^2-2b^2)
        d = other.a * other.a - CRat(2) * other.b * other.b
        if d.is_zero():
            if other.is_zero():
                raise ZeroDivisionError("division by zero Q2")
            # a^2 = 2 b^2 with (a,b) != 0 cannot happen over Q(i) unless both
            # vanish: sqrt(2) is not in Q(i)
            raise ZeroDivisionError("unreachable: sqrt(2) in Q(i)")
        inv = Q2(other.a / d, -other.b / d)
        return self * inv

    def __neg__(self):
        return Q2(-self.a, -self.b)

    def conj(self) -> "Q2":
        return Q2(self.a.conj(), self.b.conj())

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_real(self) -> bool:
        return self.a.is_real() and self.b.is_real()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CRat, Q2)):
            other = Q2.coerce(other)
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __float__(self):
        if not self.is_real():
            raise ValueError("not real")
        return float(self.a.re) + float(self.b.re) * 2.0 ** 0.5

    def __repr__(self):
        return f"Q2({self.a!r}, {self.b!r})"

    def __str__(self):
        if self.b.is_zero():
            return str(self.a)
        if self.a.is_zero():
            return f"({self.b})*sqrt(2)"
        return f"{self.a} + ({self.b})*sqrt(2)"
