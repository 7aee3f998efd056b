"""Stratified order structures: validation, the structure induced by a step
sequence (local invariants + diamond closure), class-level intersection,
stratified extensions, and the reverse construction from a structure back to
a comtrace alphabet and comtrace.

A so-structure (X, prec, wc) pairs an "earlier than" with a "not later than"
relation.  The axioms:

  S1  wc is irreflexive
  S2  prec is contained in wc
  S3  a wc b wc c and a != c    implies  a wc c
  S4  a wc b prec c, or a prec b wc c,  implies  a prec c
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from .alphabet import GAlphabet, galphabet
from .congruence import CLASS_CAP, enumerate_class
from .errors import AxiomViolation, CarrierTooLarge, InlNotEmpty
from .relations import (
    EXTENSION_CARRIER_CAP,
    Relation,
    diamond_closure,
    ordered_partitions,
    partition_to_order,
    rel_structure,
)
from .stepseq import (
    StepSeq,
    enumerate_occurrences,
    label,
    order_of,
    weak_order_of,
)


@dataclass(frozen=True)
class SoStructure:
    carrier: frozenset
    prec: Relation
    wc: Relation

    def __le__(self, other: "SoStructure") -> bool:
        return (
            self.carrier == other.carrier
            and self.prec.pairs <= other.prec.pairs
            and self.wc.pairs <= other.wc.pairs
        )


def so_structure(carrier: Iterable, prec: Iterable[tuple], wc: Iterable[tuple]) -> SoStructure:
    carrier = frozenset(carrier)
    return SoStructure(carrier, Relation.over(carrier, prec), Relation.over(carrier, wc))


def validate_so(s: SoStructure) -> SoStructure:
    """Return s if it satisfies S1-S4, else raise AxiomViolation."""
    prec, wc = s.prec.pairs, s.wc.pairs
    for a, b in wc:
        if a == b:
            raise AxiomViolation("S1", (a, b))
    for p in prec:
        if p not in wc:
            raise AxiomViolation("S2", p)
    for (a, b), (b2, c) in permutations(wc, 2):
        if b == b2 and a != c and (a, c) not in wc:
            raise AxiomViolation("S3", (a, b, c))
    for a, b in wc:
        for b2, c in prec:
            if b == b2 and (a, c) not in prec:
                raise AxiomViolation("S4", (a, b, c))
    for a, b in prec:
        for b2, c in wc:
            if b == b2 and (a, c) not in prec:
                raise AxiomViolation("S4", (a, b, c))
    return s


def is_so(s: SoStructure) -> bool:
    try:
        validate_so(s)
        return True
    except AxiomViolation:
        return False


# --------------------------------------------------------------------------
# step sequence -> so-structure
# --------------------------------------------------------------------------

def so_of_stepseq(alphabet: GAlphabet, s: StepSeq) -> SoStructure:
    """The so-structure induced by a single step sequence over a comtrace
    alphabet: filter the step-sequence orders by serializability, then take
    the diamond closure.

      local prec: alpha strictly before beta and (l(alpha), l(beta)) not ser
      local wc:   alpha not later than beta   and (l(beta), l(alpha)) not ser
    """
    if alphabet.inl:
        raise InlNotEmpty("induced so-structures need a comtrace alphabet")
    enum = enumerate_occurrences(s)
    ser = alphabet.ser
    before = order_of(enum)
    not_later = weak_order_of(enum)
    prec = {(x, y) for x, y in before.pairs if (label(x), label(y)) not in ser}
    wc = {(x, y) for x, y in not_later.pairs if (label(y), label(x)) not in ser}
    closed = diamond_closure(rel_structure(enum.carrier, prec, wc))
    return validate_so(SoStructure(closed.carrier, closed.r1, closed.r2))


def so_of_class(alphabet: GAlphabet, s: StepSeq, cap: int = CLASS_CAP) -> SoStructure:
    """The so-structure defined by the whole class of s: the intersections of
    the generated orders and of their weak companions, over all members.

    Agrees with so_of_stepseq(alphabet, s); keeping both gives the theorem
    its two independent sides.
    """
    if alphabet.inl:
        raise InlNotEmpty("induced so-structures need a comtrace alphabet")
    members = enumerate_class(alphabet, s, cap).members
    orders = [order_of(enumerate_occurrences(m)) for m in members]
    prec = frozenset.intersection(*(o.pairs for o in orders))
    wc = frozenset.intersection(*(o.weak_extension().pairs for o in orders))
    return validate_so(so_structure(orders[0].carrier, prec, wc))


# --------------------------------------------------------------------------
# stratified extensions and the Szpilrajn-style reconstruction
# --------------------------------------------------------------------------

def extensions_so(s: SoStructure, cap: int = EXTENSION_CARRIER_CAP) -> list[Relation]:
    """All stratified orders that extend the structure: prec forces strictly
    earlier blocks, wc forces not-later blocks."""
    if len(s.carrier) > cap:
        raise CarrierTooLarge(f"carrier of {len(s.carrier)} points exceeds cap {cap}")
    parts = ordered_partitions(s.carrier, strict=s.prec.pairs, weak=s.wc.pairs)
    return [partition_to_order(p) for p in parts]


def so_from_orders(orders: Iterable[Relation]) -> SoStructure:
    """(X, intersection of the orders, intersection of their weak companions).

    Applied to extensions_so(s) this reconstructs s exactly.
    """
    orders = list(orders)
    assert orders, "need at least one stratified order"
    carrier = orders[0].carrier
    assert all(o.carrier == carrier for o in orders)
    prec = frozenset.intersection(*(o.pairs for o in orders))
    wc = frozenset.intersection(*(o.weak_extension().pairs for o in orders))
    return so_structure(carrier, prec, wc)


def pi3_witness(orders: Iterable[Relation]) -> tuple | None:
    """A pair ordered both ways by members of the set but never simultaneous,
    or None.  None means the set of orders satisfies the simultaneity-closure
    paradigm: a ordered before b somewhere and after b somewhere else forces
    an order where they share a block."""
    orders = list(orders)
    assert orders
    carrier = sorted(orders[0].carrier, key=repr)
    frowns = [o.incomparability() for o in orders]
    for a in carrier:
        for b in carrier:
            if a == b:
                continue
            if any((a, b) in o for o in orders) and any((b, a) in o for o in orders):
                if not any((a, b) in f for f in frowns):
                    return (a, b)
    return None


def pi3_check(orders: Iterable[Relation]) -> bool:
    return pi3_witness(orders) is None


# --------------------------------------------------------------------------
# so-structure -> comtrace
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class InducedComtrace:
    alphabet: GAlphabet
    members: tuple  # the step sequences of the extensions, sorted


def alphabet_of_so(s: SoStructure, order: tuple | None = None) -> GAlphabet:
    """The comtrace alphabet (X, sim, ser) read off a so-structure:

      sim: distinct and prec-incomparable
      ser: sim, and additionally not wc-related the other way
    """
    sim = s.prec.incomparability().pairs
    ser = {(a, b) for a, b in sim if (b, a) not in s.wc.pairs}
    return galphabet(s.carrier, sim=sim, ser=ser, order=order)


def comtrace_of_so(s: SoStructure, order: tuple | None = None) -> InducedComtrace:
    """The comtrace generated by a so-structure: the step sequences of all
    stratified extensions, over the read-off alphabet.  This set is a single
    congruence class of that alphabet, and its induced so-structure is s
    again (both facts are theorems, exercised by the tests)."""
    theta = alphabet_of_so(s, order=order)
    parts = ordered_partitions(s.carrier, strict=s.prec.pairs, weak=s.wc.pairs)
    members = {tuple(part) for part in parts}
    return InducedComtrace(alphabet=theta, members=tuple(sorted(members, key=repr)))


def so_from_extension(s: SoStructure, ext: Relation) -> SoStructure:
    """Rebuild the structure from any single one of its stratified extensions:
    (X, ext minus ser, weak-ext minus ser-inverse), no closure needed."""
    theta = alphabet_of_so(s)
    ser = theta.ser
    prec = {(a, b) for a, b in ext.pairs if (a, b) not in ser}
    wc = {(a, b) for a, b in ext.weak_extension().pairs if (b, a) not in ser}
    return so_structure(s.carrier, prec, wc)
