"""The (g-)comtrace congruence: one-step rewrites, class enumeration,
equivalence testing and quotient composition.

Two step sequences are congruent when one rewrites to the other by a chain of

* splits   wAz  ->  wBCz   where A = B u C, B n C = empty, B x C in ser,
* joins    wBCz ->  wAz    under the same side condition, and
* swaps    wABz ->  wBAz   where A x B in inl

(the last only contributes on genuine g-comtrace alphabets).  Classes are
materialized by breadth-first search with a hard member cap; the visited set
is keyed on rendered text so enumeration order is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .alphabet import GAlphabet, Step
from .errors import ClassCapExceeded, NotTraceAlphabet
from .stepseq import StepSeq, counts, render, weight

CLASS_CAP = 100_000


@dataclass(frozen=True)
class ClassSet:
    """A materialized equivalence class: members sorted by rendered text."""

    alphabet: GAlphabet
    members: tuple

    @property
    def representative(self) -> str:
        return render(self.alphabet, self.members[0])

    @property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, s: StepSeq) -> bool:
        return s in self.member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _splits(step: Step, ser: frozenset):
    """All ordered pairs (B, C) partitioning the step with B x C in ser."""
    members = sorted(step, key=repr)
    for r in range(1, len(members)):
        for combo in combinations(members, r):
            b = frozenset(combo)
            c = step - b
            if all((x, y) in ser for x in b for y in c):
                yield b, c


def rewrite_neighbors(alphabet: GAlphabet, s: StepSeq) -> set:
    """Everything reachable from s by a single split, join or swap."""
    out = set()
    ser, inl = alphabet.ser, alphabet.inl
    for i, step in enumerate(s):
        for b, c in _splits(step, ser):
            out.add(s[:i] + (b, c) + s[i + 1:])
    for i in range(len(s) - 1):
        b, c = s[i], s[i + 1]
        if b.isdisjoint(c) and all((x, y) in ser for x in b for y in c):
            out.add(s[:i] + (b | c,) + s[i + 2:])
        if all((x, y) in inl for x in b for y in c):
            out.add(s[:i] + (c, b) + s[i + 2:])
    out.discard(s)
    return out


@lru_cache(maxsize=None)
def _class_members(alphabet: GAlphabet, s: StepSeq, cap: int) -> tuple:
    frontier = [s]
    seen = {render(alphabet, s): s}
    while frontier:
        nxt = []
        for u in frontier:
            for v in rewrite_neighbors(alphabet, u):
                key = render(alphabet, v)
                if key not in seen:
                    if len(seen) >= cap:
                        raise ClassCapExceeded(
                            f"class of {render(alphabet, s)} exceeds {cap} members"
                        )
                    seen[key] = v
                    nxt.append(v)
        frontier = nxt
    return tuple(seen[k] for k in sorted(seen))


def enumerate_class(alphabet: GAlphabet, s: StepSeq, cap: int = CLASS_CAP) -> ClassSet:
    """The full congruence class of s (breadth-first closure of the rewrites)."""
    return ClassSet(alphabet, _class_members(alphabet, s, cap))


def equivalent(alphabet: GAlphabet, s: StepSeq, t: StepSeq, cap: int = CLASS_CAP) -> bool:
    """Are s and t congruent?  Weight/count screens first; canonical forms
    when the alphabet is a comtrace alphabet; class membership in general."""
    if s == t:
        return True
    if weight(s) != weight(t) or counts(s) != counts(t):
        return False
    if alphabet.is_comtrace:
        from .canonical import canonicalize

        return canonicalize(alphabet, s) == canonicalize(alphabet, t)
    return t in enumerate_class(alphabet, s, cap)


def compose_classes(alphabet: GAlphabet, s: StepSeq, t: StepSeq, cap: int = CLASS_CAP) -> ClassSet:
    """The class of the concatenation: [s][t] = [st]."""
    return enumerate_class(alphabet, s + t, cap)


# --------------------------------------------------------------------------
# word-level traces
#
# A trace is the word-level quotient: only adjacent swaps of independent
# letters, no steps.  Over the lifted alphabet (E, ind, ind) the comtrace
# class of a lifted word is strictly larger (it contains genuine multi-event
# steps); the embedding x ind-equiv y  iff  lift(x) ser-equiv lift(y) relates
# the two quotients.
# --------------------------------------------------------------------------

def trace_neighbors(alphabet: GAlphabet, word: tuple) -> set:
    if not alphabet.is_trace:
        raise NotTraceAlphabet("trace operations need a lifted trace alphabet (sim = ser)")
    ind = alphabet.ser
    out = set()
    for i in range(len(word) - 1):
        if (word[i], word[i + 1]) in ind:
            out.add(word[:i] + (word[i + 1], word[i]) + word[i + 2:])
    return out


@lru_cache(maxsize=None)
def _trace_members(alphabet: GAlphabet, word: tuple, cap: int) -> tuple:
    frontier = [word]
    seen = {word}
    while frontier:
        nxt = []
        for u in frontier:
            for v in trace_neighbors(alphabet, u):
                if v not in seen:
                    if len(seen) >= cap:
                        raise ClassCapExceeded(f"trace class of {word} exceeds {cap} members")
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return tuple(sorted(seen))


def trace_class(alphabet: GAlphabet, word: tuple, cap: int = CLASS_CAP) -> tuple:
    """All words congruent to the given word under adjacent-swap rewriting."""
    return _trace_members(alphabet, tuple(word), cap)
