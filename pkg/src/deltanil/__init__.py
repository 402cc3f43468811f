"""Nilpotency class and upper central series of Delta(G) = 1 + J(End G)
for finite abelian p-groups G, with a brute-force oracle for small cases."""

from .alpha import (
    AlphaTable,
    Violation,
    alpha,
    alpha_table,
    closed_form_case1,
    closed_form_case2,
    find_violation,
    is_annihilating_function,
)
from .errors import *  # noqa: F401,F403
from .group import (
    Applicability,
    Case,
    GroupType,
    classify_applicability,
    delta_order,
    f_J,
    group_type,
    sigma,
    top_gap_index,
)
from .series import (
    ExponentMatrix,
    HypercenterDescription,
    SeriesReport,
    annihilator_step,
    hypercenter_description,
    ideal_product,
    nilpotency_class,
    radical_shape,
    uas_direct,
    uas_length,
    uas_via_alpha,
    ucs_report,
    y_of_g,
    zero_ideal,
)

__version__ = "0.1.0"
