"""Finite commutative rings, their zero-divisor graphs, and a harness that
cross-checks the structural characterizations relating the two."""

from .exprs import (
    Atom,
    BooleanAtom,
    ExprSemanticsError,
    ExprSyntaxError,
    IdealizationAtom,
    QuotientAtom,
    RingExpr,
    ZnAtom,
    parse_ring_expr,
)
from .graphs import (
    CAUSE_BOTH,
    CAUSE_PRODUCT,
    CAUSE_SUM,
    GRAPH_KINDS,
    TrivialGraphError,
    ZGraph,
    build_graph,
    graphs_equal,
)
from .hamiltonian import (
    ConstructionError,
    CycleSearch,
    constructive_hamiltonian_cycle,
    find_hamiltonian_cycle,
    validate_cycle,
)
from .harness import (
    ALL_CHECK_IDS,
    CheckOptions,
    FamilySpec,
    TheoremReport,
    run_check,
    run_family,
    summarize,
)
from .polynomials import (
    Poly,
    WitnessSearch,
    find_nonadjacent_zero_divisors,
    poly_graph_is_complete,
    poly_zero_divisors_form_ideal,
    zero_divisor_ideal_has_nonzero_annihilator,
)
from .rings import (
    DEFAULT_ORDER_CAP,
    BooleanRing,
    FiniteRing,
    IdealizationRing,
    LocalFactor,
    OrderCapError,
    ProductRing,
    QuotientRing,
    ZnRing,
    make_ring,
    verify_ring_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECK_IDS",
    "Atom",
    "BooleanAtom",
    "BooleanRing",
    "CAUSE_BOTH",
    "CAUSE_PRODUCT",
    "CAUSE_SUM",
    "CheckOptions",
    "ConstructionError",
    "CycleSearch",
    "DEFAULT_ORDER_CAP",
    "ExprSemanticsError",
    "ExprSyntaxError",
    "FamilySpec",
    "FiniteRing",
    "GRAPH_KINDS",
    "IdealizationAtom",
    "IdealizationRing",
    "LocalFactor",
    "OrderCapError",
    "Poly",
    "ProductRing",
    "QuotientAtom",
    "QuotientRing",
    "RingExpr",
    "TheoremReport",
    "TrivialGraphError",
    "WitnessSearch",
    "ZGraph",
    "ZnAtom",
    "ZnRing",
    "build_graph",
    "constructive_hamiltonian_cycle",
    "find_hamiltonian_cycle",
    "find_nonadjacent_zero_divisors",
    "graphs_equal",
    "make_ring",
    "parse_ring_expr",
    "poly_graph_is_complete",
    "poly_zero_divisors_form_ideal",
    "run_check",
    "run_family",
    "summarize",
    "validate_cycle",
    "verify_ring_axioms",
    "zero_divisor_ideal_has_nonzero_annihilator",
]
