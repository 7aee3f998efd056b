"""Shared fixtures: the worked alphabets, two hand-built structures, and
random-instance generators used by the bulk checks.

Alphabets are immutable, so module-level singletons are safe to share.
Names describe the wrinkle each alphabet exercises, not where it came from.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from comtrace import enumerate_class, galphabet, gso_structure, so_structure
from comtrace.stepseq import weight

# ---------------------------------------------------------------------------
# worked alphabets
# ---------------------------------------------------------------------------

# one serializable unordered pair: {b,c} splits as b-then-c only
SER_ONEWAY = galphabet("abc", sim={("b", "c")}, ser={("b", "c")})

# a is simultaneous with b, c, d but only some orders serialize;
# the a/d pair is synchronous-only (simultaneous, never serializable)
SYNC_MIX = galphabet(
    "abcde",
    sim={("a", "b"), ("a", "c"), ("a", "d")},
    ser={("a", "b"), ("b", "a"), ("a", "c")},
)

# two fully serializable pairs plus one interleaving pair (a,b)
INL_PAIR = galphabet(
    "abc",
    sim={("a", "c"), ("b", "c")},
    ser={("a", "c"), ("c", "a"), ("b", "c"), ("c", "b")},
    inl={("a", "b")},
)

# four events with mixed one-way/two-way serializability, no interleaving
DIAMOND = galphabet(
    "abcd",
    sim={("a", "b"), ("a", "d"), ("b", "c")},
    ser={("a", "b"), ("b", "a"), ("b", "c")},
)

# same but with a and c interleaving
DIAMOND_INL = galphabet(
    "abcd",
    sim={("a", "b"), ("a", "d"), ("b", "c")},
    ser={("a", "b"), ("b", "a"), ("b", "c")},
    inl={("a", "c")},
)

# smallest mix of two-way serializability and interleaving
TINY_INL = galphabet(
    "abc", sim={("a", "c")}, ser={("a", "c"), ("c", "a")}, inl={("a", "b")}
)

# b,c,d,e form a fully serializable clique; a interleaves with b, d, e
_BCDE = frozenset(permutations("bcde", 2))
CLIQUE_INL = galphabet(
    "abcde", sim=_BCDE, ser=_BCDE, inl={("a", "b"), ("a", "d"), ("a", "e")}
)

# priority-style alphabet: c may absorb into {a,c} but a never waits for c
PRIORITY = galphabet("abc", sim={("a", "c")}, ser={("c", "a")})

COMTRACE_ALPHABETS = {
    "ser_oneway": SER_ONEWAY,
    "sync_mix": SYNC_MIX,
    "diamond": DIAMOND,
    "priority": PRIORITY,
}
GC_ALPHABETS = {
    "inl_pair": INL_PAIR,
    "diamond_inl": DIAMOND_INL,
    "tiny_inl": TINY_INL,
    "clique_inl": CLIQUE_INL,
}
ALL_ALPHABETS = {**COMTRACE_ALPHABETS, **GC_ALPHABETS}

# a (alphabet, step sequence text) pair per alphabet, used by whole-class checks
CLASS_SEEDS = [
    (SER_ONEWAY, "{a}{b,c}"),
    (SYNC_MIX, "{a,b}{c}{d}"),
    (INL_PAIR, "{a,c}{b}"),
    (DIAMOND, "{a,b}{c}{a,d}"),
    (DIAMOND_INL, "{a,b}{c}{a,d}"),
    (TINY_INL, "{b}{a,c}"),
    (PRIORITY, "{a,c}{b}"),
]


# ---------------------------------------------------------------------------
# hand-built structures (five points a..e)
# ---------------------------------------------------------------------------

def _sym(pairs):
    return frozenset(pairs) | frozenset((b, a) for a, b in pairs)


_LAYER_PREC = {
    ("a", "c"), ("a", "d"), ("a", "e"),
    ("b", "d"), ("b", "e"),
    ("c", "d"), ("c", "e"),
}

# a before c, both before the d/e layer; b squeezed not-later than c
LAYERED_SO = so_structure(
    "abcde", _LAYER_PREC, _LAYER_PREC | {("b", "c"), ("d", "e"), ("e", "d")}
)

# same weak layering, but a and c may occur in either order, never together
CROSSING_GSO = gso_structure(
    "abcde",
    _sym({("a", "c"), ("b", "e"), ("e", "a"), ("a", "d"),
          ("e", "c"), ("c", "d"), ("d", "b")}),
    {("a", "e"), ("a", "d"), ("c", "e"), ("c", "d"),
     ("b", "e"), ("b", "d"), ("b", "c"), ("d", "e"), ("e", "d")},
)


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------

def random_alphabet(rng: random.Random, events: str = "abcd", allow_inl: bool = False):
    """Each unordered pair independently draws a flavour; ser stays inside sim
    and inl stays disjoint from sim by construction."""
    sim, ser, inl = set(), set(), set()
    flavours = ["none", "sim", "ser1", "ser2"]
    if allow_inl:
        flavours += ["inl", "inl"]
    for a, b in combinations(events, 2):
        kind = rng.choice(flavours)
        if kind == "none":
            continue
        if kind == "inl":
            inl.add((a, b))
            continue
        sim.add((a, b))
        if kind == "ser1":
            ser.add((a, b) if rng.random() < 0.5 else (b, a))
        elif kind == "ser2":
            ser.add((a, b))
            ser.add((b, a))
    return galphabet(events, sim=sim, ser=ser, inl=inl)


def random_stepseq(rng: random.Random, alph, max_len: int = 4):
    steps = alph.steps_universe()
    length = rng.randint(1, max_len)
    return tuple(rng.choice(steps) for _ in range(length))


def random_instance(
    rng: random.Random,
    *,
    events: str = "abcd",
    allow_inl: bool = False,
    max_len: int = 4,
    class_cap: int = 400,
    weight_cap: int | None = None,
):
    """Draw (alphabet, step sequence, class members) with the class small enough
    to brute-force; oversized draws are rejected and retried so every sampled
    instance stays within the stated bounds."""
    while True:
        n = rng.randint(2, len(events))
        alph = random_alphabet(rng, events[:n], allow_inl=allow_inl)
        s = random_stepseq(rng, alph, max_len=max_len)
        if weight_cap is not None and weight(s) > weight_cap:
            continue
        members = enumerate_class(alph, s, cap=50 * class_cap)
        if len(members) <= class_cap:
            return alph, s, members


@pytest.fixture
def rng():
    return random.Random(0xC0)
