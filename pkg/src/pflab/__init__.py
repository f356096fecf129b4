"""Finite commutative rings and the "every principal ideal is flat" property."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AxiomViolation,
    DiscrepancyError,
    EnumerationOverflow,
    InvariantBreach,
    NotAnIdeal,
    PflabError,
    RingConstructionError,
    SizeCapExceeded,
)
from .rings import (  # noqa: E402
    FiniteRing,
    RingElement,
    dup_retract,
    duplication,
    element_census,
    load_table_ring,
    localize_at_maximal,
    poly_quot,
    product,
    quotient,
    table_ring,
    truncated_poly,
    zmod,
)
from .ideals import (  # noqa: E402
    Ideal,
    all_ideals,
    annihilator,
    classify_ideal,
    ideal_arith,
    ideal_generate,
    is_arithmetical,
    is_pure,
    maximal_ideals,
)
from .abelian import (  # noqa: E402
    IntMatrix,
    is_flat_module,
    module_presentation,
    smith_normal_form,
    tensor_over_ring,
)
from .flatness import (  # noqa: E402
    PfVerdict,
    every_ideal_pflat,
    every_principal_pflat,
    is_pf,
    is_pflat_module,
    pf_check_condition4,
    pf_via_flat_oracle,
    wgldim_le_1,
)
from .theorems import CrossReport, cross_validate  # noqa: E402
from .dsl import evaluate, parse_expr, print_expr  # noqa: E402

__all__ = [
    "__version__",
    "AxiomViolation",
    "DiscrepancyError",
    "EnumerationOverflow",
    "InvariantBreach",
    "NotAnIdeal",
    "PflabError",
    "RingConstructionError",
    "SizeCapExceeded",
    "FiniteRing",
    "RingElement",
    "dup_retract",
    "duplication",
    "element_census",
    "load_table_ring",
    "localize_at_maximal",
    "poly_quot",
    "product",
    "quotient",
    "table_ring",
    "truncated_poly",
    "zmod",
    "Ideal",
    "all_ideals",
    "annihilator",
    "classify_ideal",
    "ideal_arith",
    "ideal_generate",
    "is_arithmetical",
    "is_pure",
    "maximal_ideals",
    "IntMatrix",
    "is_flat_module",
    "module_presentation",
    "smith_normal_form",
    "tensor_over_ring",
    "PfVerdict",
    "every_ideal_pflat",
    "every_principal_pflat",
    "is_pf",
    "is_pflat_module",
    "pf_check_condition4",
    "pf_via_flat_oracle",
    "wgldim_le_1",
    "CrossReport",
    "cross_validate",
    "evaluate",
    "parse_expr",
    "print_expr",
]
