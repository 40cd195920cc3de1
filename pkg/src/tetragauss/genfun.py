"""Polynomials and rational generating functions over Gaussian integers.

Generating functions here are ratios of polynomials whose denominator has
a nonzero constant term, so a power-series expansion always exists and is
computed exactly. The even/odd bisection is done algebraically with the
parity filter P(x)Q(-x) +/- P(-x)Q(x), never with square-root
substitutions, so everything stays in exact integer arithmetic.
"""

from __future__ import annotations

from .backend import kernel
from .gaussint import ZERO, GaussianInt, as_gaussian, exact_div
from .sequences import SeqSpec, gaussian_initials


class GPoly:
    """Polynomial with Gaussian-integer coefficients, low power first.

    Canonical form strips trailing zeros; the zero polynomial has an empty
    coefficient tuple and degree -inf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        vals = [as_gaussian(c) for c in coeffs]
        while vals and not vals[-1]:
            vals.pop()
        self.coeffs = tuple(vals)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> GaussianInt:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __eq__(self, other):
        if isinstance(other, GPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"GPoly({list(self.coeffs)!r})"

    def __add__(self, other: GPoly) -> GPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return GPoly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: GPoly) -> GPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return GPoly([self[k] - other[k] for k in range(n)])

    def __neg__(self) -> GPoly:
        return GPoly([-c for c in self.coeffs])

    def __mul__(self, other: GPoly) -> GPoly:
        if self.is_zero() or other.is_zero():
            return GPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return GPoly(out)

    def scale(self, factor) -> GPoly:
        factor = as_gaussian(factor)
        return GPoly([c * factor for c in self.coeffs])

    def reflect(self) -> GPoly:
        """Substitute x -> -x (negate odd-power coefficients)."""
        return GPoly([-c if k % 2 else c for k, c in enumerate(self.coeffs)])

    def shift_down(self, k: int) -> GPoly:
        """Divide by x**k; the k lowest coefficients must be zero."""
        for j in range(min(k, len(self.coeffs))):
            if self.coeffs[j]:
                raise ArithmeticError(f"coefficient of x^{j} is {self.coeffs[j]}, not 0")
        return GPoly(self.coeffs[k:])

    def compress_even(self) -> GPoly:
        """Substitute x**2 -> y; all odd-power coefficients must be zero."""
        for j in range(1, len(self.coeffs), 2):
            if self.coeffs[j]:
                raise ArithmeticError(
                    f"odd-power coefficient survived parity filter: x^{j} -> {self.coeffs[j]}"
                )
        return GPoly(self.coeffs[0::2])

    def halve(self) -> GPoly:
        return GPoly([exact_div(c, 2) for c in self.coeffs])

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]


class RationalGF:
    """Ratio of two polynomials; a formal power series around zero.

    Not reduced to lowest terms: equality is cross-multiplied.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: GPoly, den: GPoly):
        if not den[0]:
            raise ValueError("denominator constant term is zero; no series expansion")
        self.num = num
        self.den = den

    def __eq__(self, other):
        if isinstance(other, RationalGF):
            return gf_equal(self, other)
        return NotImplemented

    def __repr__(self):
        return f"RationalGF({pretty(self.num)!r}, {pretty(self.den)!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    """True iff both represent the same power series (cross-multiplication)."""
    return a.num * b.den == b.num * a.den


# 1 - x - x^2 - x^3 - x^4, the series denominator of the whole family
SERIES_DEN = GPoly([1, -1, -1, -1, -1])

# its parity-filtered image: 1 - 3y - 3y^2 + y^3 + y^4
BISECTED_DEN = GPoly([1, -3, -3, 1, 1])


def gf_for(spec: SeqSpec, gaussian: bool = False) -> RationalGF:
    """The sequence's generating function with the standard numerator shape."""
    if gaussian:
        v0, v1, v2, v3 = gaussian_initials(spec)
    else:
        v0, v1, v2, v3 = (as_gaussian(c) for c in spec.initials)
    num = GPoly([v0, v1 - v0, v2 - v1 - v0, v3 - v2 - v1 - v0])
    return RationalGF(num, SERIES_DEN)


def coeffs(gf: RationalGF, k: int) -> list[GaussianInt]:
    """First k power-series coefficients, exactly.

    A unit constant term in the denominator is divided out up front;
    otherwise every coefficient goes through a checked exact division.
    """
    if k <= 0:
        return []
    d0 = gf.den[0]
    if not d0:
        raise ValueError("denominator constant term is zero; no series expansion")
    if d0.is_unit():
        u = d0.conjugate()  # the unit inverse
        num = gf.num.scale(u)
        den = gf.den.scale(u)
        return kernel.series_expand(num.coeffs, den.coeffs[1:], k, ZERO)
    out: list[GaussianInt] = []
    dtail = gf.den.coeffs[1:]
    for idx in range(k):
        acc = gf.num[idx]
        for j, dj in enumerate(dtail, start=1):
            if j > idx:
                break
            acc = acc - dj * out[idx - j]
        out.append(exact_div(acc, d0))
    return out


def bisect(gf: RationalGF, parity: str) -> RationalGF:
    """Generating function of the even- or odd-indexed subsequence.

    For f = P/Q the even part is [P(x)Q(-x) + P(-x)Q(x)] / [2 Q(x)Q(-x)]
    and the odd part the same with a minus sign and one power of x divided
    out; surviving powers x**(2j) are rewritten as y**j. Wrong-parity
    coefficients are checked to vanish before compression.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', not {parity!r}")
    p, q = gf.num, gf.den
    pr, qr = p.reflect(), q.reflect()
    den = (q * qr).compress_even()
    if parity == "even":
        num = (p * qr + pr * q).halve().compress_even()
    else:
        num = (p * qr - pr * q).halve().shift_down(1).compress_even()
    return RationalGF(num, den)


def closed_even_odd(spec: SeqSpec, parity: str, gaussian: bool = False) -> RationalGF:
    """Closed form of the even/odd bisection straight from the initial values."""
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', not {parity!r}")
    if gaussian:
        v0, v1, v2, v3 = gaussian_initials(spec)
    else:
        v0, v1, v2, v3 = (as_gaussian(c) for c in spec.initials)
    if parity == "even":
        num = GPoly([v0, v2 - 3 * v0, v1 + v3 - 2 * v0 - 2 * v2, v3 - 2 * v2])
    else:
        num = GPoly([v1, v3 - 3 * v1, v0 - v1 + 2 * v2 - v3, v0 + v1 + v2 - v3])
    return RationalGF(num, BISECTED_DEN)


def _term_text(c: GaussianInt, k: int, var: str) -> tuple[str, str]:
    """(sign, body) for one rendered term; sign is '+' or '-'."""
    power = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
    re_, im_ = c.re, c.im
    if im_ == 0:
        sign = "-" if re_ < 0 else "+"
        mag = abs(re_)
        if k > 0 and mag == 1:
            return sign, power
        return sign, f"{mag}{power}"
    if re_ == 0:
        sign = "-" if im_ < 0 else "+"
        mag = abs(im_)
        body = "i" if mag == 1 else f"{mag}i"
        return sign, f"{body}{power}"
    body = str(c)
    if k > 0:
        body = f"({body})"
    return "+", f"{body}{power}"


def pretty(poly: GPoly, var: str = "x") -> str:
    """Human-readable rendering, low powers first: ``(1+i)x+(1-i)x^2-ix^3``."""
    if poly.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(poly.coeffs):
        if not c:
            continue
        sign, body = _term_text(c, k, var)
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign}{body}")
    return "".join(parts)


def pretty_gf(gf: RationalGF, var: str = "x") -> str:
    return f"({pretty(gf.num, var)}) / ({pretty(gf.den, var)})"
