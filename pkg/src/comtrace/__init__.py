"""Quotient monoids of step sequences (comtraces and their generalization
with interleaving) and the order structures they induce."""

from .alphabet import (
    GAlphabet,
    derived_relations,
    event_text,
    galphabet,
    lift_trace_alphabet,
    lift_word,
)
from .canonical import (
    canonicalize,
    foata_trace,
    forward_dependent,
    g_canonical,
    is_canonical,
    is_gmc,
    is_mc,
    lex_key,
    step_order_key,
)
from .congruence import (
    CLASS_CAP,
    ClassSet,
    compose_classes,
    enumerate_class,
    equivalent,
    trace_class,
)
from .errors import ComtraceError
from .files import load_alphabet, load_structure, parse_alphabet, parse_structure
from .gsostruct import (
    GsoStructure,
    alphabet_of_gso,
    extensions_gso,
    gcomtrace_of_gso,
    gso_of_class,
    gso_of_stepseq,
    gso_structure,
    semican,
    validate_gso,
)
from .lang import GcLanguage, language_algebra, lift, priority_language
from .relations import (
    Relation,
    RelStructure,
    bowtie_closure,
    diamond_closure,
    extensions,
    ordered_partitions,
    szpilrajn_check,
)
from .sostruct import (
    SoStructure,
    alphabet_of_so,
    comtrace_of_so,
    extensions_so,
    pi3_check,
    so_of_class,
    so_of_stepseq,
    so_structure,
    validate_so,
)
from .stepseq import cancel, cancel_all, parse, project, render

__all__ = [name for name in dir() if not name.startswith("_")]
