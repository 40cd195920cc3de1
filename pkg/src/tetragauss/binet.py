"""Floating-point closed-form evaluation via the characteristic quartic.

The recurrence's characteristic polynomial x^4 - x^3 - x^2 - x - 1 has one
real root above 1, one real root in (-1, 0) and a complex-conjugate pair.
Terms can be evaluated as a coefficient combination of root powers; this
module computes the roots (numerically and from the nested-radical closed
form), builds the coefficients for any spec, and evaluates terms with a
validation flag describing whether rounding back to the exact integer can
be trusted.

Conventions baked in here (each is pinned by a test against the exact
recurrence):

* the fourth coefficient uses the fourth root (the conjugate of the
  third), completing the pattern of the other three;
* Gaussian evaluation takes its imaginary part from the plain evaluation
  at n-1, matching GV(n) = V(n) + i*V(n-1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cache

from .gaussint import GaussianInt
from .sequences import SeqSpec

#: residual scale for accepting a computed root r: |p(r)| <= TOL * max(1, |r|^4)
RESIDUAL_TOL = 1e-12

#: |n| beyond which rounding is no longer claimed trustworthy
VALIDATION_LIMIT = 64

#: fraction of the 0.5 rounding radius reserved as a drift guard
GUARD_BAND = 0.02


def _poly(z: complex) -> complex:
    return (((z - 1) * z - 1) * z - 1) * z - 1


def _dpoly(z: complex) -> complex:
    return ((4 * z - 3) * z - 2) * z - 1


@dataclass(frozen=True)
class QuarticRoots:
    """The four characteristic roots with a fixed labeling.

    ``alpha``: the real root above 1 (largest modulus); ``beta``: the real
    root in (-1, 0); ``gamma``: the complex root with positive imaginary
    part; ``delta``: its conjugate.
    """

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.alpha, self.beta, self.gamma, self.delta)


def _check_residuals(roots: QuarticRoots) -> None:
    for r in roots.as_tuple():
        if abs(_poly(r)) > RESIDUAL_TOL * max(1.0, abs(r) ** 4):
            raise ArithmeticError(f"root {r} fails the residual bound")


def _label(roots: list[complex]) -> QuarticRoots:
    real = [z for z in roots if abs(z.imag) < 1e-8]
    cplx = [z for z in roots if z.imag >= 1e-8]
    if len(real) != 2 or len(cplx) != 1:
        raise ArithmeticError(f"unexpected root layout: {roots}")
    alpha = complex(max(z.real for z in real), 0.0)
    beta = complex(min(z.real for z in real), 0.0)
    gamma = cplx[0]
    if not (1.92 < alpha.real < 1.93 and -1.0 < beta.real < 0.0):
        raise ArithmeticError(f"mislabeled real roots: {alpha}, {beta}")
    return QuarticRoots(alpha, beta, gamma, gamma.conjugate())


@cache
def roots_numeric() -> QuarticRoots:
    """All four roots by simultaneous (Durand-Kerner) iteration plus Newton polish."""
    zs = [complex(0.4, 0.9) ** k for k in range(4)]
    for _ in range(200):
        new = []
        for i, z in enumerate(zs):
            denom = complex(1.0)
            for j, w in enumerate(zs):
                if i != j:
                    denom *= z - w
            new.append(z - _poly(z) / denom)
        drift = max(abs(a - b) for a, b in zip(new, zs))
        zs = new
        if drift < 1e-14:
            break
    else:
        raise ArithmeticError("root iteration did not converge")
    for _ in range(3):
        zs = [z - _poly(z) / _dpoly(z) for z in zs]
    # keep only the positive-imag representative of the conjugate pair
    roots = _label([z for z in zs if z.imag > -1e-8])
    _check_residuals(roots)
    return roots


def _real_cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def roots_radical() -> QuarticRoots:
    """The roots evaluated from their nested-radical closed form.

    The inner square root for the conjugate pair has a negative argument,
    so those two come out through the complex square root.
    """
    s = math.sqrt(563.0 / 108.0)
    omega = math.sqrt(11.0 / 12.0 + _real_cbrt(-65.0 / 54.0 + s) + _real_cbrt(-65.0 / 54.0 - s))
    plus = 11.0 / 4.0 - omega * omega + (13.0 / 4.0) / omega
    minus = 11.0 / 4.0 - omega * omega - (13.0 / 4.0) / omega
    sq_plus = cmath.sqrt(complex(plus, 0.0))
    sq_minus = cmath.sqrt(complex(minus, 0.0))
    base_real = 0.25 + omega / 2.0
    base_cplx = 0.25 - omega / 2.0
    roots = QuarticRoots(
        alpha=base_real + sq_plus / 2.0,
        beta=base_real - sq_plus / 2.0,
        gamma=base_cplx + sq_minus / 2.0,
        delta=base_cplx - sq_minus / 2.0,
    )
    _check_residuals(roots)
    return roots


@dataclass(frozen=True)
class BinetCoeffs:
    """Per-root coefficients A, B, C, D for one spec."""

    A: complex
    B: complex
    C: complex
    D: complex

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.A, self.B, self.C, self.D)


def binet_coeffs(spec: SeqSpec) -> BinetCoeffs:
    """Coefficients such that V(n) = A a^(n-6) + B b^(n-6) + C g^(n-6) + D d^(n-6)."""
    c0, c1, c2, c3 = spec.initials
    roots = roots_numeric()

    def coeff(r: complex) -> complex:
        denom = 5 * r - 8
        if abs(denom) < 1e-6:
            raise ArithmeticError(f"degenerate coefficient denominator at root {r}")
        return (r - 1) / denom * (c3 * r**3 + (c0 + c1 + c2) * r**2 + (c1 + c2) * r + c2)

    a, b, g, d = roots.as_tuple()
    return BinetCoeffs(coeff(a), coeff(b), coeff(g), coeff(d))


@dataclass(frozen=True)
class BinetEval:
    """One evaluated term with rounding metadata.

    ``validated`` means: the index is inside the trusted range, the
    imaginary residue vanished to tolerance, and the value sits close
    enough to an integer that rounding is meaningful.
    """

    n: int
    gaussian: bool
    value: complex
    rounded: int | GaussianInt
    validated: bool


def _plain_value(spec: SeqSpec, n: int) -> complex:
    roots = roots_numeric()
    cs = binet_coeffs(spec)
    return sum(c * r ** (n - 6) for c, r in zip(cs.as_tuple(), roots.as_tuple()))


def _residue_ok(value: complex) -> bool:
    return abs(value.imag) < 1e-6 * max(1.0, abs(value))


def _near_int(x: float) -> bool:
    return abs(x - round(x)) <= 0.5 * (1.0 - GUARD_BAND)


def binet_eval(
    spec: SeqSpec,
    n: int,
    gaussian: bool = False,
    validation_limit: int = VALIDATION_LIMIT,
) -> BinetEval:
    """Evaluate one term in floating point; exactness is never assumed.

    Any integer n is accepted; outside ``validation_limit`` the result is
    returned with ``validated=False`` because float error can exceed the
    rounding radius.
    """
    if gaussian:
        re_val = _plain_value(spec, n)
        im_val = _plain_value(spec, n - 1)
        in_range = abs(n) <= validation_limit and abs(n - 1) <= validation_limit
        if in_range and not (_residue_ok(re_val) and _residue_ok(im_val)):
            raise ArithmeticError(f"imaginary residue too large at n={n}")
        ok = in_range and _near_int(re_val.real) and _near_int(im_val.real)
        value = complex(re_val.real, im_val.real)
        rounded = GaussianInt(round(re_val.real), round(im_val.real))
        return BinetEval(n, True, value, rounded, ok)
    value = _plain_value(spec, n)
    in_range = abs(n) <= validation_limit
    if in_range and not _residue_ok(value):
        raise ArithmeticError(f"imaginary residue too large at n={n}")
    ok = in_range and _near_int(value.real)
    return BinetEval(n, False, value, round(value.real), ok)


@dataclass(frozen=True)
class SymmetricCheck:
    """Deviations of the elementary symmetric functions from (1, -1, 1, -1)."""

    ok: bool
    deviations: tuple[float, float, float, float]

    def describe(self) -> str:
        labels = ("e1-1", "e2+1", "e3-1", "e4+1")
        body = ", ".join(f"{lbl}={dev:.3e}" for lbl, dev in zip(labels, self.deviations))
        return f"{'ok' if self.ok else 'FAIL'}: {body}"


def symmetric_check(tol: float = 1e-10) -> SymmetricCheck:
    """Check the elementary symmetric functions of the computed roots."""
    a, b, g, d = roots_numeric().as_tuple()
    e1 = a + b + g + d
    e2 = a * b + a * g + a * d + b * g + b * d + g * d
    e3 = a * b * g + a * b * d + a * g * d + b * g * d
    e4 = a * b * g * d
    devs = (abs(e1 - 1), abs(e2 + 1), abs(e3 - 1), abs(e4 + 1))
    return SymmetricCheck(all(dev <= tol for dev in devs), devs)
