"""Finite step-sequence languages and their quotient class languages:
lifting, flattening, concatenation, union, bounded Kleene closure, prefix
closure, and the Priority system example.

Everything is materialized: a step-sequence language is a frozenset of step
sequences, a class language is a frozenset of enumerated classes.  Stars are
truncated by factor count (union of n-fold concatenations, n <= bound), which
commutes exactly with taking classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import GAlphabet, galphabet
from .congruence import CLASS_CAP, ClassSet, compose_classes, enumerate_class
from .errors import BoundExceeded
from .stepseq import StepSeq

LANG_CAP = 100_000

Language = frozenset  # of StepSeq


def _guard(size: int, cap: int, what: str):
    if size > cap:
        raise BoundExceeded(f"{what} would materialize {size} sequences (cap {cap})")


# --------------------------------------------------------------------------
# step-sequence level
# --------------------------------------------------------------------------

def concat_lang(a: Language, b: Language, cap: int = LANG_CAP) -> Language:
    _guard(len(a) * len(b), cap, "concatenation")
    return frozenset(s + t for s in a for t in b)


def union_lang(a: Language, b: Language) -> Language:
    return a | b


def star_lang(lang: Language, bound: int, cap: int = LANG_CAP) -> Language:
    """Union of the n-fold concatenations for n = 0 .. bound."""
    out = {()}
    layer: Language = frozenset({()})
    for _ in range(bound):
        layer = concat_lang(layer, lang, cap)
        out |= layer
        _guard(len(out), cap, "star")
    return frozenset(out)


def prefix_closure(lang: Language) -> Language:
    """All step-boundary prefixes of all members (lambda included)."""
    return frozenset(s[:i] for s in lang for i in range(len(s) + 1))


# --------------------------------------------------------------------------
# class level
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GcLanguage:
    alphabet: GAlphabet
    classes: frozenset  # of ClassSet

    def members(self) -> Language:
        """All step sequences of all classes (the flattening)."""
        return frozenset(m for c in self.classes for m in c.members)

    def __contains__(self, s: StepSeq) -> bool:
        return any(s in c for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def lift(alphabet: GAlphabet, lang: Language, cap: int = CLASS_CAP) -> GcLanguage:
    """The class language generated by a step-sequence language."""
    return GcLanguage(
        alphabet, frozenset(enumerate_class(alphabet, s, cap) for s in lang)
    )


def flatten(lang: GcLanguage) -> Language:
    return lang.members()


def concat_classes(a: GcLanguage, b: GcLanguage, cap: int = CLASS_CAP) -> GcLanguage:
    assert a.alphabet == b.alphabet
    out = {
        compose_classes(a.alphabet, c.members[0], d.members[0], cap)
        for c in a.classes
        for d in b.classes
    }
    return GcLanguage(a.alphabet, frozenset(out))


def union_classes(a: GcLanguage, b: GcLanguage) -> GcLanguage:
    assert a.alphabet == b.alphabet
    return GcLanguage(a.alphabet, a.classes | b.classes)


def star_classes(lang: GcLanguage, bound: int, cap: int = CLASS_CAP) -> GcLanguage:
    empty = enumerate_class(lang.alphabet, (), cap)
    out = {empty}
    layer = GcLanguage(lang.alphabet, frozenset({empty}))
    for _ in range(bound):
        layer = concat_classes(layer, lang, cap)
        out |= layer.classes
    return GcLanguage(lang.alphabet, frozenset(out))


def language_algebra(inputs: tuple, op: str, bound: int | None = None, cap: int = LANG_CAP):
    """Named dispatch over the language operations.  Step-sequence operands
    are plain frozensets, class operands are GcLanguage values; 'lift' takes
    (alphabet, language) and 'flatten' a single GcLanguage."""
    if op == "lift":
        alphabet, lang = inputs
        return lift(alphabet, lang, cap)
    if op == "flatten":
        (lang,) = inputs
        return flatten(lang)
    if op == "prefix_closure":
        (lang,) = inputs
        return prefix_closure(lang)
    if op == "concat":
        a, b = inputs
        if isinstance(a, GcLanguage):
            return concat_classes(a, b, cap)
        return concat_lang(a, b, cap)
    if op == "union":
        a, b = inputs
        if isinstance(a, GcLanguage):
            return union_classes(a, b)
        return union_lang(a, b)
    if op == "star":
        (lang,) = inputs
        assert bound is not None, "star needs a bound"
        if isinstance(lang, GcLanguage):
            return star_classes(lang, bound, cap)
        return star_lang(lang, bound, cap)
    raise ValueError(f"unknown operation {op!r}")


# --------------------------------------------------------------------------
# the Priority system
# --------------------------------------------------------------------------

def priority_alphabet() -> GAlphabet:
    """Two cyclic subsystems with a handshake on b and a priority of b over c:
    a and c may run simultaneously, and that step serializes only as c first."""
    return galphabet("abc", sim={("a", "c")}, ser={("c", "a")})


def priority_language(bound: int, cap: int = LANG_CAP) -> Language:
    """All runs of the Priority system with at most `bound` steps: the prefix
    closure of ({c}* u {a}{b} u {a,c}{b})*, truncated by length."""
    assert bound >= 0
    c, a, b, ac = (
        frozenset("c"),
        frozenset("a"),
        frozenset("b"),
        frozenset("ac"),
    )
    fragments: Language = frozenset({(c,), (a, b), (ac, b)})
    # every length-k prefix of the full language is a prefix of a
    # concatenation of at most k+1 fragments
    words = star_lang(fragments, bound + 1, cap)
    closed = prefix_closure(words)
    return frozenset(s for s in closed if len(s) <= bound)
