"""Center algebras of forms, power-sum decompositions, radical solutions.

The package decides when a univariate equation is a disguised sum of two
d-th powers (or a linear form times a power) by computing the center algebra
of its homogenization, completes the powers exactly, and returns radical
root expressions together with an independent numeric cross-check.
"""

from .center import (
    CenterBasis,
    CenterGenerator,
    binary_center_system,
    center_generator,
    compute_center,
    d_invariants,
    is_nondegenerate,
)
from .diagonalize import (
    AlgebraProfile,
    DiagonalDecomposition,
    diagonalize_form,
    profile,
)
from .errors import (
    CenterRankError,
    CenterSolveError,
    DegreeError,
    EffectiveDegreeError,
    IrrationalSpectrumError,
    NoRadicalMethodError,
    NonConvergenceError,
    NotDiagonalizableError,
    PivotError,
    RepeatedEigenvalueError,
    ResolventFailureError,
)
from .forms import (
    BinaryForm,
    LinearForm,
    NAryForm,
    PowerSumDecomposition,
    UnivariateEquation,
    evaluate,
    expand,
    from_norm_coeffs,
    from_plain_coeffs,
    hessian,
)
from .oracle import (
    MatchReport,
    OracleRootSet,
    check_decomposition,
    compare_root_sets,
    numeric_roots,
    rational_roots,
)
from .parser import ParsedInput, PolyParseError, parse_polynomial, render_polynomial
from .scalars import DEFAULT_PREC, QuadExt, exact_sqrt, nth_root, rational_nth_root
from .solver import (
    DepressedQuartic,
    EquationClass,
    HankelMatrix,
    QuarticSolution,
    RadicalRoot,
    ResolventData,
    RootSet,
    cardano,
    classify,
    complete_cube,
    complete_powers,
    depress_quartic,
    hankel,
    max_scaled_residual,
    reversal_transform,
    shift_equation,
    solve_by_radicals,
    solve_quartic_by_two_squares,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraProfile",
    "BinaryForm",
    "CenterBasis",
    "CenterGenerator",
    "CenterRankError",
    "CenterSolveError",
    "DEFAULT_PREC",
    "DegreeError",
    "DepressedQuartic",
    "DiagonalDecomposition",
    "EffectiveDegreeError",
    "EquationClass",
    "HankelMatrix",
    "IrrationalSpectrumError",
    "LinearForm",
    "MatchReport",
    "NAryForm",
    "NoRadicalMethodError",
    "NonConvergenceError",
    "NotDiagonalizableError",
    "OracleRootSet",
    "ParsedInput",
    "PivotError",
    "PolyParseError",
    "PowerSumDecomposition",
    "QuadExt",
    "QuarticSolution",
    "RadicalRoot",
    "RepeatedEigenvalueError",
    "ResolventData",
    "ResolventFailureError",
    "RootSet",
    "UnivariateEquation",
    "binary_center_system",
    "cardano",
    "center_generator",
    "check_decomposition",
    "classify",
    "compare_root_sets",
    "complete_cube",
    "complete_powers",
    "compute_center",
    "d_invariants",
    "depress_quartic",
    "diagonalize_form",
    "evaluate",
    "exact_sqrt",
    "expand",
    "from_norm_coeffs",
    "from_plain_coeffs",
    "hankel",
    "hessian",
    "is_nondegenerate",
    "max_scaled_residual",
    "nth_root",
    "numeric_roots",
    "parse_polynomial",
    "profile",
    "rational_nth_root",
    "rational_roots",
    "render_polynomial",
    "reversal_transform",
    "shift_equation",
    "solve_by_radicals",
    "solve_quartic_by_two_squares",
]
