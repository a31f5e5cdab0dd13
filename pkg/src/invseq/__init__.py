"""Pattern-avoiding inversion sequences.

Four cooperating views of the same counting problems: a brute-force
oracle (``invseq.oracle``), generating-tree rule systems
(``invseq.succession``), exact series algebra (``invseq.series``), and
the word-level machinery underneath all of them (``invseq.core``).  The
``invseq`` command line ties them together.
"""

from .core import (
    avoids,
    contains,
    is_inversion_sequence,
    is_valid_pattern,
    parse_word,
    render_word,
    standardize,
    structure_check_201_210,
    structure_profile,
    StructureProfile,
    validate_pattern,
)
from .oracle import count_avoiders, count_sequence, list_avoiders
from .series import (
    check_system_201_210,
    f_coefficients,
    format_series,
    iterate_fe,
    phi,
    PolyRelation,
    relation_residual,
    series_sqrt,
    TruncatedSeries,
    verify_conjecture_010_102,
)
from .succession import (
    count_via_rules,
    emit_diagram,
    get_system,
    rule_counting_sequence,
    state_profile,
    step,
    step_fast,
)

__version__ = "0.1.0"

__all__ = [
    "avoids",
    "check_system_201_210",
    "contains",
    "count_avoiders",
    "count_sequence",
    "count_via_rules",
    "emit_diagram",
    "f_coefficients",
    "format_series",
    "get_system",
    "is_inversion_sequence",
    "is_valid_pattern",
    "iterate_fe",
    "list_avoiders",
    "parse_word",
    "phi",
    "PolyRelation",
    "relation_residual",
    "render_word",
    "rule_counting_sequence",
    "series_sqrt",
    "standardize",
    "state_profile",
    "step",
    "step_fast",
    "structure_check_201_210",
    "structure_profile",
    "StructureProfile",
    "TruncatedSeries",
    "validate_pattern",
    "verify_conjecture_010_102",
]
