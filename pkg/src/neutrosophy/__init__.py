"""Neutrosophic (T, I, F) triples over the non-standard unit interval.

Exact hyperreal endpoints, finite interval unions, and a classifier for
the derived set, probability and logic classes.
"""

from .errors import (
    ComponentError,
    CorpusError,
    EmptyInput,
    EmptySubset,
    InvalidInterval,
    InvalidLabel,
    LiteralSyntaxError,
    NeutrosophyError,
    OutOfRange,
    ParseError,
    UnknownElement,
)
from .hyperreal import (
    MINUS_ZERO,
    ONE,
    ONE_PLUS,
    THREE_PLUS,
    ZERO,
    ZERO_PLUS,
    Hyperreal,
    Ordering,
    hr,
    hr_add,
    hr_cmp,
    hr_standard_part,
    in_unit_range,
)
from .intervals import (
    NSInterval,
    NSSubset,
    as_subset,
    ns_contains,
    ns_equals,
    ns_inf,
    ns_interval,
    ns_normalize,
    ns_singleton,
    ns_sup,
)
from .taxonomy import (
    Label,
    LabelSet,
    NeutroTriple,
    classify,
    display_name,
    is_classical,
    is_faillibilist,
    is_fuzzy,
    is_intuitionistic,
    is_nihilist,
    is_paraconsistent,
    is_paradoxist,
    is_pseudo_paradoxist,
    is_tautological,
    n_inf,
    n_sup,
)
from .models import (
    ComplementSpace,
    Proposition,
    PropositionCorpus,
    SetModel,
    belongs_to,
    belongs_to_complement,
    classify_probability,
    classify_proposition,
    is_dialetheist_set,
    is_dialetheist_space,
    is_trivialist_set,
    is_trivialist_space,
    lift_label,
)
from .textio import format_triple, parse_endpoint, parse_hyperreal, parse_subset, parse_triple
from .corpus import (
    ClassificationRecord,
    check_invariants,
    classify_file,
    lattice_report,
    read_corpus,
)

__version__ = "0.1.0"
