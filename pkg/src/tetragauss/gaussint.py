"""Exact Gaussian integers on top of Python's arbitrary-precision ints.

This is the scalar type for the whole package: every matrix entry,
polynomial coefficient and sequence value is either an ``int`` or a
:class:`GaussianInt`, so all arithmetic stays exact at any magnitude.
"""

from __future__ import annotations


class InexactDivisionError(ArithmeticError):
    """Raised when an exact Gaussian division leaves a remainder."""


class GaussianInt:
    """Immutable Gaussian integer ``re + im*i``.

    Instances mix freely with plain ``int`` in arithmetic; the int is
    treated as a Gaussian integer with zero imaginary part.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int = 0):
        self.re = re
        self.im = im

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re - other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInt(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if isinstance(other, GaussianInt):
            a, b, c, d = self.re, self.im, other.re, other.im
            # Skipping the zero cross terms matters when huge real values
            # flow through (matrix powering at large indices).
            if d == 0:
                return GaussianInt(a * c, b * c)
            if b == 0:
                return GaussianInt(a * c, a * d)
            return GaussianInt(a * c - b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    # -- structure ------------------------------------------------------

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm_sq(self) -> int:
        """Squared Euclidean norm ``re**2 + im**2`` (exact, non-negative)."""
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.re * self.re + self.im * self.im == 1

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    # -- rendering ------------------------------------------------------

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        unit = "i" if abs(im_) == 1 else f"{abs(im_)}i"
        if re_ == 0:
            return unit if im_ > 0 else "-" + unit
        sign = "+" if im_ > 0 else "-"
        return f"{re_}{sign}{unit}"

    def to_json(self) -> dict:
        """JSON form with decimal-string parts (safe for any magnitude)."""
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj: dict) -> GaussianInt:
        return cls(int(obj["re"]), int(obj["im"]))

    @classmethod
    def parse(cls, text: str) -> GaussianInt:
        """Parse the textual rendering: ``0``, ``-7``, ``i``, ``2i``, ``15-19i``."""
        s = text.strip()
        try:
            if not s.endswith("i"):
                return cls(int(s), 0)
            body = s[:-1]
            # the sign separating the two parts is never at position 0
            split = max(body.rfind("+", 1), body.rfind("-", 1))
            if split == -1:
                re_part, coef = 0, body
            else:
                re_part, coef = int(body[:split]), body[split:]
            if coef in ("", "+"):
                im_part = 1
            elif coef == "-":
                im_part = -1
            else:
                im_part = int(coef)
            return cls(re_part, im_part)
        except ValueError:
            raise ValueError(f"not a Gaussian integer: {text!r}") from None


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)


def as_gaussian(value) -> GaussianInt:
    """Promote ``int`` to :class:`GaussianInt`; pass Gaussian values through."""
    if isinstance(value, GaussianInt):
        return value
    if isinstance(value, int):
        return GaussianInt(value, 0)
    raise TypeError(f"cannot treat {type(value).__name__} as a Gaussian integer")


def exact_div(num, den) -> GaussianInt:
    """Exact quotient ``num / den`` over the Gaussian integers.

    Raises :class:`InexactDivisionError` unless ``den`` divides ``num``
    exactly (checked componentwise after multiplying by the conjugate),
    and :class:`ZeroDivisionError` for a zero divisor.
    """
    num = as_gaussian(num)
    den = as_gaussian(den)
    nsq = den.norm_sq()
    if nsq == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    scaled = num * den.conjugate()
    if scaled.re % nsq or scaled.im % nsq:
        raise InexactDivisionError(f"{den} does not divide {num}")
    return GaussianInt(scaled.re // nsq, scaled.im // nsq)
