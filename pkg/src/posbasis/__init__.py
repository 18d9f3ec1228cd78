"""Exact construction and certification of positive spanning sets,
positively linearly independent sets and positive bases."""

__version__ = "0.1.0"

from .cone import (  # noqa: E402
    CheckReport,
    is_pli,
    is_positive_basis,
    is_positively_spanning,
    remove_one_still_spans,
)
from .generators import (  # noqa: E402
    CircleParam,
    gen_binomial,
    gen_circle_lift,
    gen_maximal_basis,
    gen_minimal_basis,
    rational_circle_point,
)
from .lp import (  # noqa: E402
    Coefficients,
    FarkasCertificate,
    FeasibilityProblem,
    Inside,
    Outside,
    solve_feasibility,
    verify_certificate,
    verify_inside,
)
from .numerics import Matrix, Vec, VecSet, rank, rat, scale, vec  # noqa: E402
