"""Generalized Tetranacci sequences and their Gaussian-integer lifts.

A sequence is defined by four initial values and the recurrence
``V(n) = V(n-1) + V(n-2) + V(n-3) + V(n-4)``, extended to negative
indices by running the recurrence backwards. The Gaussian lift is
``GV(n) = V(n) + i*V(n-1)``, which satisfies the same recurrence.
"""

from __future__ import annotations

from .backend import kernel
from .gaussint import GaussianInt


class SeqSpec:
    """Initial values ``(c0, c1, c2, c3)`` of a generalized sequence.

    The all-zero spec is rejected: it defines the zero sequence, which is
    excluded from the family. Internal callers that need the zero sequence
    (e.g. linearity checks) can use :meth:`unchecked`.
    """

    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0: int, c1: int, c2: int, c3: int):
        for v in (c0, c1, c2, c3):
            if not isinstance(v, int):
                raise TypeError(f"initial values must be ints, got {type(v).__name__}")
        if c0 == c1 == c2 == c3 == 0:
            raise ValueError("initial values must not all be zero")
        self.c0 = c0
        self.c1 = c1
        self.c2 = c2
        self.c3 = c3

    @classmethod
    def unchecked(cls, c0: int, c1: int, c2: int, c3: int) -> SeqSpec:
        """Construct without the all-zero guard."""
        spec = object.__new__(cls)
        spec.c0 = c0
        spec.c1 = c1
        spec.c2 = c2
        spec.c3 = c3
        return spec

    @property
    def initials(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __eq__(self, other):
        if isinstance(other, SeqSpec):
            return self.initials == other.initials
        return NotImplemented

    def __hash__(self):
        return hash(self.initials)

    def __repr__(self):
        return f"SeqSpec{self.initials}"


# Named specs; the single-letter tags are the CLI/registry selectors.
TETRANACCI = SeqSpec(0, 1, 1, 2)
TETRANACCI_LUCAS = SeqSpec(4, 1, 3, 7)
TETRANACCI_SHIFTED = SeqSpec(0, 0, 1, 1)  # equals TETRANACCI delayed one index

NAMED_SPECS: dict[str, SeqSpec] = {
    "M": TETRANACCI,
    "R": TETRANACCI_LUCAS,
    "U": TETRANACCI_SHIFTED,
}


def term(spec: SeqSpec, n: int) -> int:
    """V(n) for any integer n, exactly."""
    return kernel.term_iter(spec.c0, spec.c1, spec.c2, spec.c3, n)


def gterm(spec: SeqSpec, n: int) -> GaussianInt:
    """GV(n) = V(n) + i*V(n-1) for any integer n."""
    prev, cur = kernel.sweep(spec.c0, spec.c1, spec.c2, spec.c3, n - 1, n)
    return GaussianInt(cur, prev)


def gaussian_initials(spec: SeqSpec) -> tuple[GaussianInt, GaussianInt, GaussianInt, GaussianInt]:
    """The four Gaussian initial values (GV0, GV1, GV2, GV3)."""
    c0, c1, c2, c3 = spec.initials
    return (
        GaussianInt(c0, c3 - c2 - c1 - c0),
        GaussianInt(c1, c0),
        GaussianInt(c2, c1),
        GaussianInt(c3, c2),
    )


def term_range(spec: SeqSpec, lo: int, hi: int, gaussian: bool = False) -> list:
    """Terms (or Gaussian terms) for indices lo..hi in a single sweep."""
    if lo > hi:
        raise ValueError(f"malformed range: {lo} > {hi}")
    if not gaussian:
        return kernel.sweep(spec.c0, spec.c1, spec.c2, spec.c3, lo, hi)
    vals = kernel.sweep(spec.c0, spec.c1, spec.c2, spec.c3, lo - 1, hi)
    return [GaussianInt(cur, prev) for prev, cur in zip(vals, vals[1:])]
