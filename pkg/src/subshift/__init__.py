"""Exact engine for subshifts of finite type.

Adjacency matrices and their graph predicates, admissible words and
eventually periodic points, exact cylinder-function algebra, weighted
transfer operators with constructive weight recovery, dynamical
certificates (invariant sets, minimality, topological freeness), and
the simplicity dichotomy verdict with machine-checkable reports.
"""

from . import errors
from .cylinders import (
    CylinderFunction,
    DomainMask,
    alpha,
    evaluate,
    format_function_file,
    mask_image,
    parse_function_file,
    pointwise,
    refine,
)
from .errors import SubshiftError
from .freeness import (
    FreenessCertificate,
    FreenessEntry,
    InvariantSetCertificate,
    MinimalityWitness,
    find_nontrivial_invariant,
    freeness_certificate,
    minimality_witness,
)
from .graph import (
    AdjacencyMatrix,
    Word,
    find_path,
    format_matrix,
    is_cycle,
    is_transitive,
    parse_matrix,
    preimage_symbols,
)
from .sequences import (
    EventuallyPeriodicSeq,
    as_word,
    contains_word,
    enumerate_words,
    is_admissible,
    one_sided_seq,
    periodic_points,
    periodic_seq,
    shift,
    word_from_string,
    word_to_string,
)
from .transfer import (
    AbstractTransferOp,
    Weight,
    as_operator,
    format_weight_file,
    parse_weight_file,
    recover_weight,
    transfer_apply,
    verify_transfer_identity,
    weights_equivalent,
    zero_set,
)
from .verdict import (
    INCONCLUSIVE,
    NOT_ISOMORPHIC,
    AnalysisVerdict,
    analyze,
    parse_report,
    render_report,
    verify_report,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractTransferOp",
    "AdjacencyMatrix",
    "AnalysisVerdict",
    "CylinderFunction",
    "DomainMask",
    "EventuallyPeriodicSeq",
    "FreenessCertificate",
    "FreenessEntry",
    "INCONCLUSIVE",
    "InvariantSetCertificate",
    "MinimalityWitness",
    "NOT_ISOMORPHIC",
    "SubshiftError",
    "Weight",
    "Word",
    "alpha",
    "analyze",
    "as_operator",
    "as_word",
    "contains_word",
    "enumerate_words",
    "errors",
    "evaluate",
    "find_nontrivial_invariant",
    "find_path",
    "format_function_file",
    "format_matrix",
    "format_weight_file",
    "freeness_certificate",
    "is_admissible",
    "is_cycle",
    "is_transitive",
    "mask_image",
    "minimality_witness",
    "one_sided_seq",
    "parse_function_file",
    "parse_matrix",
    "parse_report",
    "parse_weight_file",
    "periodic_points",
    "periodic_seq",
    "pointwise",
    "preimage_symbols",
    "recover_weight",
    "refine",
    "render_report",
    "shift",
    "transfer_apply",
    "verify_report",
    "verify_transfer_identity",
    "weights_equivalent",
    "word_from_string",
    "word_to_string",
    "zero_set",
]
