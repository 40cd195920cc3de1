"""Exact 4x4 matrix algebra and companion-matrix powering.

The companion matrix of the 4-step recurrence shifts a window of four
consecutive terms; its n-th power therefore computes terms in O(log |n|)
exact multiplications. Negative powers stay integral because the
determinant is a unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import sequences
from .gaussint import GaussianInt, as_gaussian
from .sequences import SeqSpec, TETRANACCI, TETRANACCI_LUCAS, TETRANACCI_SHIFTED


class NonInvertibleError(ValueError):
    """Inverse requested for a matrix whose determinant is not a unit."""


class Matrix4:
    """Immutable 4x4 matrix of Gaussian integers."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(as_gaussian(v) for v in row) for row in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("Matrix4 requires a 4x4 array")
        self.rows = rows

    @classmethod
    def identity(cls) -> Matrix4:
        return cls([[1 if i == j else 0 for j in range(4)] for i in range(4)])

    @classmethod
    def zero(cls) -> Matrix4:
        return cls([[0] * 4 for _ in range(4)])

    def entry(self, i: int, j: int) -> GaussianInt:
        return self.rows[i][j]

    def __matmul__(self, other: Matrix4) -> Matrix4:
        return mat_mul(self, other)

    def __eq__(self, other):
        if isinstance(other, Matrix4):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"Matrix4[{body}]"

    def to_json(self) -> list:
        return [[v.to_json() for v in row] for row in self.rows]


def companion() -> Matrix4:
    """The recurrence's companion matrix."""
    return Matrix4([[1, 1, 1, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])


def mat_mul(x: Matrix4, y: Matrix4) -> Matrix4:
    xr, yr = x.rows, y.rows
    ycols = tuple(zip(*yr))
    out = []
    for row in xr:
        out.append(
            [
                row[0] * col[0] + row[1] * col[1] + row[2] * col[2] + row[3] * col[3]
                for col in ycols
            ]
        )
    return Matrix4(out)


def _det3(e) -> GaussianInt:
    return (
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
        - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
        + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    )


def _minor(rows, i: int, j: int):
    return [[v for c, v in enumerate(row) if c != j] for r, row in enumerate(rows) if r != i]


def det(m: Matrix4) -> GaussianInt:
    total = GaussianInt(0)
    for j in range(4):
        cof = m.rows[0][j] * _det3(_minor(m.rows, 0, j))
        total = total + (cof if j % 2 == 0 else -cof)
    return total


def inverse(m: Matrix4) -> Matrix4:
    """Exact inverse via the adjugate; requires a unit determinant."""
    d = det(m)
    if not d.is_unit():
        raise NonInvertibleError(f"determinant {d} is not a unit; inverse is not integral")
    # for units, 1/d equals the conjugate
    dinv = d.conjugate()
    adj = [
        [
            (_det3(_minor(m.rows, j, i)) if (i + j) % 2 == 0 else -_det3(_minor(m.rows, j, i)))
            * dinv
            for j in range(4)
        ]
        for i in range(4)
    ]
    return Matrix4(adj)


def mat_pow(base: Matrix4, n: int) -> Matrix4:
    """base**n by binary powering; n < 0 uses the exact integral inverse."""
    if n < 0:
        base = inverse(base)
        n = -n
    result = Matrix4.identity()
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


@lru_cache(maxsize=4096)
def _companion_power(n: int) -> Matrix4:
    return mat_pow(companion(), n)


def _bottom_row_apply(power: Matrix4, spec: SeqSpec) -> int:
    col = (spec.c3, spec.c2, spec.c1, spec.c0)
    row = power.rows[3]
    val = row[0] * col[0] + row[1] * col[1] + row[2] * col[2] + row[3] * col[3]
    if val.im != 0:
        raise ArithmeticError("companion power produced a non-real term")
    return val.re


def term_by_power(spec: SeqSpec, n: int) -> int:
    """V(n) in O(log |n|) matrix products; agrees exactly with sequences.term."""
    return _bottom_row_apply(_companion_power(n), spec)


@dataclass(frozen=True)
class MatrixCheck:
    """Outcome of an entrywise matrix comparison."""

    ok: bool
    label: str
    mismatch: tuple[int, int, GaussianInt, GaussianInt] | None = None

    def describe(self) -> str:
        if self.ok:
            return f"{self.label}: ok"
        i, j, lhs, rhs = self.mismatch
        return f"{self.label}: entry ({i},{j}) computed {lhs} != expected {rhs}"


def _compare(label: str, got: Matrix4, expected: Matrix4) -> MatrixCheck:
    for i in range(4):
        for j in range(4):
            if got.rows[i][j] != expected.rows[i][j]:
                return MatrixCheck(False, label, (i, j, got.rows[i][j], expected.rows[i][j]))
    return MatrixCheck(True, label)


def _window_rows(n: int, t: Callable[[int], int], shift: int) -> Matrix4:
    # row r encodes the window at base n - r (+ shift for the delayed sequence)
    rows = []
    for r in range(4):
        k = n - r + shift
        rows.append([t(k + 1), t(k) + t(k - 1) + t(k - 2), t(k) + t(k - 1), t(k)])
    return Matrix4(rows)


def structure_check(n: int) -> MatrixCheck:
    """Check the three closed forms of the companion power entrywise.

    The power can be written over the primary sequence, over its delayed
    variant, and over the delayed variant with the second column replaced
    by differences; all three must match the actual power.
    """
    if n < 0:
        raise ValueError("structure_check is defined for n >= 0")
    power = _companion_power(n)
    t_m = lambda k: sequences.term(TETRANACCI, k)
    t_u = lambda k: sequences.term(TETRANACCI_SHIFTED, k)

    check = _compare("primary-form", power, _window_rows(n, t_m, 0))
    if not check.ok:
        return check
    check = _compare("delayed-form", power, _window_rows(n, t_u, 1))
    if not check.ok:
        return check
    rows = []
    for r in range(4):
        k = n - r
        rows.append(
            [t_u(k + 2), t_u(k + 2) - t_u(k - 2), t_u(k + 1) + t_u(k), t_u(k + 1)]
        )
    return _compare("difference-form", power, Matrix4(rows))


@dataclass(frozen=True)
class NVCoefficients:
    """Last-column entries of the Hankel seed matrix for an arbitrary spec."""

    a1: GaussianInt
    a2: GaussianInt
    a3: GaussianInt
    a4: GaussianInt

    @classmethod
    def from_spec(cls, spec: SeqSpec) -> NVCoefficients:
        c0, c1, c2, c3 = spec.initials
        i = GaussianInt(0, 1)
        return cls(
            a1=GaussianInt(1, -1) * c0 - i * c1 - i * c2 + i * c3,
            a2=GaussianInt(1, -1) * c3 - c1 - GaussianInt(1, -2) * c2 - c0,
            a3=2 * i * c1 + GaussianInt(2, -1) * c2 - c3,
            a4=2 * i * c0 + GaussianInt(2, -1) * c1 - c2,
        )


_N_M = Matrix4(
    [
        [GaussianInt(2, 1), GaussianInt(1, 1), 1, 0],
        [GaussianInt(1, 1), 1, 0, 0],
        [1, 0, 0, GaussianInt(0, 1)],
        [0, 0, GaussianInt(0, 1), GaussianInt(1, -1)],
    ]
)

_N_R = Matrix4(
    [
        [GaussianInt(7, 3), GaussianInt(3, 1), GaussianInt(1, 4), GaussianInt(4, -1)],
        [GaussianInt(3, 1), GaussianInt(1, 4), GaussianInt(4, -1), GaussianInt(-1, -1)],
        [GaussianInt(1, 4), GaussianInt(4, -1), GaussianInt(-1, -1), GaussianInt(-1, -1)],
        [GaussianInt(4, -1), GaussianInt(-1, -1), GaussianInt(-1, -1), GaussianInt(-1, 7)],
    ]
)


def _hankel(spec: SeqSpec, n: int) -> Matrix4:
    vals = sequences.term_range(spec, n - 3, n + 3, gaussian=True)
    g = lambda k: vals[k - (n - 3)]
    return Matrix4([[g(n + 3 - r - c) for c in range(4)] for r in range(4)])


def build_NE(which) -> tuple[Matrix4, Callable[[int], Matrix4]]:
    """Seed matrix N and the Hankel matrix accessor E for a sequence.

    ``which`` is "M", "R", or a :class:`SeqSpec`. The product of the n-th
    companion power with N equals E(n), the 4x4 Hankel matrix of Gaussian
    terms at indices n+3 .. n-3.
    """
    if which == "M":
        spec, n_mat = TETRANACCI, _N_M
    elif which == "R":
        spec, n_mat = TETRANACCI_LUCAS, _N_R
    elif isinstance(which, SeqSpec):
        spec = which
        c0, c1, c2, c3 = spec.initials
        a = NVCoefficients.from_spec(spec)
        e0 = GaussianInt(c3, c2)
        e1 = GaussianInt(c2, c1)
        e2 = GaussianInt(c1, c0)
        n_mat = Matrix4(
            [
                [e0, e1, e2, a.a1],
                [e1, e2, a.a1, a.a2],
                [e2, a.a1, a.a2, a.a3],
                [a.a1, a.a2, a.a3, a.a4],
            ]
        )
    else:
        raise ValueError(f"unknown sequence selector: {which!r}")
    return n_mat, lambda n: _hankel(spec, n)


def ne_theorem_check(which, n: int) -> MatrixCheck:
    """Check companion_power(n) @ N == E(n) entrywise."""
    n_mat, e_at = build_NE(which)
    label = which if isinstance(which, str) else repr(which)
    return _compare(f"hankel-product[{label}] n={n}", mat_mul(_companion_power(n), n_mat), e_at(n))
