"""Connectedness and indecomposability verdicts for squarefree monomial ideals."""

from .decompose import (
    Decomposition,
    decompose,
    dim_quotient,
    ext_height_mod_prime,
    height,
    ideal_top,
    lower_part,
    minimal_primes,
    reduction_assertions,
    top_components,
    u_ideal,
)
from .errors import (
    CapacityError,
    DomainError,
    InputError,
    InvariantError,
    ParseError,
    SpecgraphError,
)
from .graphs import (
    Connectivity,
    ConnectivityCertificate,
    GraphKind,
    PrimeGraph,
    SimplicialComplex,
    connectivity,
    facet_ridge_graph,
    graph_def51,
    graph_def61,
    graph_punctured,
    height_in_quotient,
    make_complex,
    stanley_reisner,
)
from .ideal import (
    MonomialPrime,
    SquarefreeIdeal,
    VariableContext,
    contained_in_prime,
    equals,
    ideal_sum,
    intersect,
    intersect_primes,
    make_context,
    make_ideal,
    make_prime,
    unit_ideal,
    zero_ideal,
)
from .parser import parse_ideal_expression
from .verdicts import (
    AnalysisReport,
    Verdict,
    analyze_Hc,
    analyze_ideal_transform,
    analyze_punctured,
    analyze_top_cohomology,
    build_report,
    endomorphism_report,
    split_Hc,
)

__version__ = "0.1.0"
