"""Exact-arithmetic kernel for the 128-dimensional Clifford algebra with
seven anticommuting square-root-of-minus-one generators, the octonion
product carved out of it by a trivector projector, the steered product
family built from fold operations, and a verdict harness that scans the
claimed laws of those products.
"""

from .blades import (
    DIM,
    GRADE,
    N_BLADES,
    PSEUDOSCALAR,
    blade_mul,
    blade_square_sign,
    grade,
)
from .multivector import (
    Multivector,
    OneSidedOnly,
    Singular,
    conjugation,
    gp,
    grade_involution,
    grade_project,
    grade_project_01,
    inverse,
    psi,
    reversion,
)
from .octonion import (
    Octonion,
    circ,
    circ_via_gp,
    is_s7,
    oct_conj,
    oct_inverse,
    one_x_product,
    table_oracle,
    table_product,
    x_product,
    xy_product,
)
from .genprod import (
    ASCENDING,
    DEFAULT_FOLD,
    DESCENDING,
    Degenerate,
    E7_CORRECTED,
    E7_PRINTED,
    FoldConvention,
    ODOT_LEFT,
    ODOT_RIGHT,
    bullet_left,
    bullet_right,
    chi_left,
    chi_right,
    circ_1u,
    circ_u,
    circ_uC,
    circ_uv,
    e_units,
    make_C,
    odot,
    odot_left,
    odot_right,
    theorem1_check,
)
from .laws import (
    FAILS,
    HOLDS,
    HOLDS_WITH_SIGN,
    LawCase,
    LawVerdict,
    build_report,
    check_lemma,
    check_lemma1b,
    check_moufang,
    reproduce_example,
    sigma_scan,
    theorem1_scan,
    verify_table,
)
from .exprlang import Env, ExprError, evaluate, parse
from .exprlang import run as run_expr

__version__ = "0.1.0"
