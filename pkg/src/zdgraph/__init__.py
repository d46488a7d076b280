"""Compressed zero-divisor graphs of quotient rings of a UFD.

Public API is re-exported from the submodules; see README.md for a tour.
"""

from .arithmetic import (
    Factorization,
    FpPoly,
    Irreducible,
    factor_integer,
    factor_polynomial,
    gcd_exponents,
    multiplicity_vector,
)
from .compressed_graph import (
    ZERO_CLASS,
    CompressedGraph,
    Graph,
    Vertex,
    ZeroDivisorBasis,
    expand_to_full_graph,
    from_json,
    gcd_class_representative,
    graph_from_exponents,
    graph_from_factorization,
    signature,
    to_dot,
    to_json,
    vertex_count,
    zero_divisor_basis,
)
from .conjectures import (
    ConjectureReport,
    check_conjecture1,
    check_conjecture2,
    check_conjecture3,
    check_conjecture4,
    default_instances,
    generalized_basis,
    parse_instance_line,
    report_to_json,
    scan_conjecture,
)
from .finite_ring import (
    AnnihilatorClass,
    BivariateMonomialQuotient,
    GrammarError,
    IntegersMod,
    PolyQuotient,
    QuotientRing,
    RingTooLarge,
    annihilator,
    count_regular_elements,
    element_label,
    enumerate_elements,
    format_ring_spec,
    full_zero_divisor_graph,
    ideal_is_union,
    ideal_members,
    oracle_compressed_graph,
    parse_element,
    parse_ring_spec,
    quotient_by_ideal,
    ring_size,
    zero_divisor_classes,
)
from .isomorphism import (
    IsoReport,
    SearchBudgetExceeded,
    graphs_isomorphic,
    signature_sufficient,
)
from .sweeps import (
    SweepOutcome,
    blowup_sweep,
    gcd_theorem_sweep,
    looped_necessity_sweep,
    nz_lemma_sweep,
    oracle_equivalence_sweep,
    polynomial_oracle_sweep,
    signature_sufficiency_sweep,
)

__all__ = [
    "AnnihilatorClass",
    "BivariateMonomialQuotient",
    "CompressedGraph",
    "ConjectureReport",
    "Factorization",
    "FpPoly",
    "GrammarError",
    "Graph",
    "IntegersMod",
    "Irreducible",
    "IsoReport",
    "PolyQuotient",
    "QuotientRing",
    "RingTooLarge",
    "SearchBudgetExceeded",
    "SweepOutcome",
    "Vertex",
    "ZERO_CLASS",
    "ZeroDivisorBasis",
    "annihilator",
    "blowup_sweep",
    "check_conjecture1",
    "check_conjecture2",
    "check_conjecture3",
    "check_conjecture4",
    "count_regular_elements",
    "default_instances",
    "element_label",
    "enumerate_elements",
    "expand_to_full_graph",
    "factor_integer",
    "factor_polynomial",
    "format_ring_spec",
    "from_json",
    "full_zero_divisor_graph",
    "gcd_class_representative",
    "gcd_exponents",
    "gcd_theorem_sweep",
    "generalized_basis",
    "graph_from_exponents",
    "graph_from_factorization",
    "graphs_isomorphic",
    "ideal_is_union",
    "ideal_members",
    "looped_necessity_sweep",
    "multiplicity_vector",
    "nz_lemma_sweep",
    "oracle_compressed_graph",
    "oracle_equivalence_sweep",
    "parse_element",
    "parse_instance_line",
    "parse_ring_spec",
    "polynomial_oracle_sweep",
    "quotient_by_ideal",
    "report_to_json",
    "ring_size",
    "scan_conjecture",
    "signature",
    "signature_sufficiency_sweep",
    "signature_sufficient",
    "to_dot",
    "to_json",
    "vertex_count",
    "zero_divisor_basis",
    "zero_divisor_classes",
]
