"""Exact Tetranacci-family sequences over the Gaussian integers.

Everything is computed in exact integer arithmetic (plain terms, Gaussian
lifts, generating functions, companion-matrix powers) except the Binet
module, which is the deliberately floating-point cross-check of the exact
side.
"""

from .backend import KERNEL_NAME, available_kernels
from .binet import (
    BinetCoeffs,
    BinetEval,
    QuarticRoots,
    binet_coeffs,
    binet_eval,
    roots_numeric,
    roots_radical,
    symmetric_check,
)
from .gaussint import GaussianInt, InexactDivisionError, as_gaussian, exact_div
from .genfun import (
    GPoly,
    RationalGF,
    bisect,
    closed_even_odd,
    coeffs,
    gf_equal,
    gf_for,
    pretty,
    pretty_gf,
)
from .identities import (
    CATALOG,
    IdentityReport,
    NonIntegralSolutionError,
    SeqHandle,
    SingularSystemError,
    SpuriousRelationError,
    TermSource,
    check_addition_theorem,
    check_evenodd_cross,
    check_gr_gm_relations,
    check_sums,
    check_u_lifts,
    make_source,
    run_suite,
    solve_linear_relation,
)
from .matrixengine import (
    Matrix4,
    NVCoefficients,
    NonInvertibleError,
    build_NE,
    companion,
    det,
    inverse,
    mat_mul,
    mat_pow,
    ne_theorem_check,
    structure_check,
    term_by_power,
)
from .sequences import (
    NAMED_SPECS,
    TETRANACCI,
    TETRANACCI_LUCAS,
    TETRANACCI_SHIFTED,
    SeqSpec,
    gaussian_initials,
    gterm,
    term,
    term_range,
)

__version__ = "0.1.0"
