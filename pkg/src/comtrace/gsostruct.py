"""Generalized stratified order structures (commutativity + weak causality),
their induced so-structure, the structure generated by a step sequence over a
g-comtrace alphabet (local invariants + bowtie closure), stratified
extensions, the reverse construction back to a g-comtrace, the semi-canonical
step builder, and serializability analysis of single steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .alphabet import GAlphabet, Step, galphabet
from .canonical import step_order_key
from .congruence import CLASS_CAP, enumerate_class
from .errors import AxiomViolation, CarrierTooLarge, EmptyZ
from .relations import (
    EXTENSION_CARRIER_CAP,
    Relation,
    _nonempty_subsets,
    bowtie_closure,
    ordered_partitions,
    partition_to_order,
    rel_structure,
)
from .sostruct import SoStructure, validate_so
from .stepseq import (
    StepSeq,
    enumerate_occurrences,
    label,
    order_of,
    weak_order_of,
)

SEMICAN_MINS_CAP = 20


@dataclass(frozen=True)
class GsoStructure:
    carrier: frozenset
    cmt: Relation  # commutativity: never simultaneous
    wc: Relation  # weak causality: not later than

    @property
    def induced_so(self) -> SoStructure:
        return SoStructure(self.carrier, self.cmt & self.wc, self.wc)

    def __le__(self, other: "GsoStructure") -> bool:
        return (
            self.carrier == other.carrier
            and self.cmt.pairs <= other.cmt.pairs
            and self.wc.pairs <= other.wc.pairs
        )


def gso_structure(carrier: Iterable, cmt: Iterable[tuple], wc: Iterable[tuple]) -> GsoStructure:
    carrier = frozenset(carrier)
    return GsoStructure(carrier, Relation.over(carrier, cmt), Relation.over(carrier, wc))


def validate_gso(g: GsoStructure) -> GsoStructure:
    """wc irreflexive, cmt symmetric irreflexive, induced so-structure valid."""
    for a, b in g.wc.pairs:
        if a == b:
            raise AxiomViolation("G1", (a, b))
    for a, b in g.cmt.pairs:
        if a == b or (b, a) not in g.cmt.pairs:
            raise AxiomViolation("G2", (a, b))
    validate_so(g.induced_so)
    return g


def is_gso(g: GsoStructure) -> bool:
    try:
        validate_gso(g)
        return True
    except AxiomViolation:
        return False


# --------------------------------------------------------------------------
# step sequence -> gso-structure
# --------------------------------------------------------------------------

def _local_invariants(alphabet: GAlphabet, s: StepSeq):
    """The three occurrence relations read off a single step sequence.

    cmt: labels interleaving-related.
    wc:  not later, and the reversal is neither serializable nor interleaving.
    prec: strictly earlier, and one of
      (i)   the pair is neither serializable nor interleaving;
      (ii)  cmt, but forced apart by cmt-free company inside weak cycles;
      (iii) serializable, but two occurrences strictly ordered and not
            serializable are squeezed between the pair along weak chains.
    """
    enum = enumerate_occurrences(s)
    carrier, pos = enum.carrier, enum.pos
    ser, inl = alphabet.ser, alphabet.inl
    serinl = ser | inl
    cmt = Relation.over(
        carrier,
        (
            (x, y)
            for x in carrier
            for y in carrier
            if (label(x), label(y)) in inl
        ),
    )
    wc = Relation.over(
        carrier,
        (
            (x, y)
            for x, y in weak_order_of(enum).pairs
            if (label(y), label(x)) not in serinl
        ),
    )
    wreach = wc.reflexive_transitive_closure()
    both_ways = wreach.symmetric_intersection()
    squeeze = both_ways.compose(cmt.complement()).compose(both_ways)
    prec_pairs = set()
    for x, y in order_of(enum).pairs:
        if (label(x), label(y)) not in serinl:
            prec_pairs.add((x, y))
        elif (x, y) in cmt.pairs and (x, y) in squeeze.pairs:
            prec_pairs.add((x, y))
        elif (label(x), label(y)) in ser:
            between = [
                z for z in carrier if (x, z) in wreach.pairs and (z, y) in wreach.pairs
            ]
            if any(
                pos[d] < pos[g] and (label(d), label(g)) not in ser
                for d in between
                for g in between
            ):
                prec_pairs.add((x, y))
    return cmt, wc, Relation.over(carrier, prec_pairs)


def gso_of_stepseq(alphabet: GAlphabet, s: StepSeq) -> GsoStructure:
    """The gso-structure induced by a single step sequence: bowtie closure of
    (prec u cmt, prec u wc) over the local invariants."""
    cmt, wc, prec = _local_invariants(alphabet, s)
    closed = bowtie_closure(
        rel_structure(cmt.carrier, prec.pairs | cmt.pairs, prec.pairs | wc.pairs)
    )
    return validate_gso(GsoStructure(closed.carrier, closed.r1, closed.r2))


def gso_of_class(alphabet: GAlphabet, s: StepSeq, cap: int = CLASS_CAP) -> GsoStructure:
    """The gso-structure defined by the whole class: intersection of the
    symmetric closures of the generated orders, and of their weak companions."""
    members = enumerate_class(alphabet, s, cap).members
    orders = [order_of(enumerate_occurrences(m)) for m in members]
    cmt = frozenset.intersection(*(o.symmetric_closure().pairs for o in orders))
    wc = frozenset.intersection(*(o.weak_extension().pairs for o in orders))
    return gso_structure(orders[0].carrier, cmt, wc)


# --------------------------------------------------------------------------
# stratified extensions and reconstruction
# --------------------------------------------------------------------------

def extensions_gso(g: GsoStructure, cap: int = EXTENSION_CARRIER_CAP) -> list[Relation]:
    """Stratified orders where cmt pairs land in different blocks and wc pairs
    in not-later blocks."""
    if len(g.carrier) > cap:
        raise CarrierTooLarge(f"carrier of {len(g.carrier)} points exceeds cap {cap}")
    parts = ordered_partitions(g.carrier, weak=g.wc.pairs, apart=g.cmt.pairs)
    return [partition_to_order(p) for p in parts]


def gso_from_orders(orders: Iterable[Relation]) -> GsoStructure:
    """(X, intersection of symmetric closures, intersection of weak companions);
    applied to extensions_gso(g) this reconstructs g exactly."""
    orders = list(orders)
    assert orders, "need at least one stratified order"
    carrier = orders[0].carrier
    assert all(o.carrier == carrier for o in orders)
    cmt = frozenset.intersection(*(o.symmetric_closure().pairs for o in orders))
    wc = frozenset.intersection(*(o.weak_extension().pairs for o in orders))
    return gso_structure(carrier, cmt, wc)


# --------------------------------------------------------------------------
# gso-structure -> g-comtrace
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class InducedGComtrace:
    alphabet: GAlphabet
    members: tuple  # step sequences of the extensions, sorted


def alphabet_of_gso(g: GsoStructure, order: tuple | None = None) -> GAlphabet:
    """(X, sim, ser, inl) read off a gso-structure:

      sim: distinct and not cmt
      ser: sim, and not wc-related the other way
      inl: cmt but wc-unrelated both ways
    """
    cmt, wc = g.cmt.pairs, g.wc.pairs
    sim = {(a, b) for a in g.carrier for b in g.carrier if a != b and (a, b) not in cmt}
    ser = {(a, b) for a, b in sim if (b, a) not in wc}
    inl = {(a, b) for a, b in cmt if (a, b) not in wc and (b, a) not in wc}
    return galphabet(g.carrier, sim=sim, ser=ser, inl=inl, order=order)


def gcomtrace_of_gso(g: GsoStructure, order: tuple | None = None) -> InducedGComtrace:
    """The g-comtrace generated by a gso-structure: the step sequences of all
    stratified extensions over the read-off alphabet (a single congruence
    class, whose induced gso-structure is g again -- both are theorems)."""
    theta = alphabet_of_gso(g, order=order)
    parts = ordered_partitions(g.carrier, weak=g.wc.pairs, apart=g.cmt.pairs)
    members = {tuple(part) for part in parts}
    return InducedGComtrace(alphabet=theta, members=tuple(sorted(members, key=repr)))


def gso_from_extension(g: GsoStructure, ext: Relation) -> GsoStructure:
    """Rebuild the structure from one stratified extension, no closure needed:
    (X, sym(ext minus ser) u inl, weak-ext minus (ser-inverse u inl))."""
    theta = alphabet_of_gso(g)
    ser, inl = theta.ser, theta.inl
    stripped = {(a, b) for a, b in ext.pairs if (a, b) not in ser}
    cmt = stripped | {(b, a) for a, b in stripped} | inl
    wc = {
        (a, b)
        for a, b in ext.weak_extension().pairs
        if (b, a) not in ser and (a, b) not in inl
    }
    return gso_structure(g.carrier, cmt, wc)


# --------------------------------------------------------------------------
# semi-canonical construction
# --------------------------------------------------------------------------

def semican(alphabet: GAlphabet, g: GsoStructure, mins_cap: int = SEMICAN_MINS_CAP) -> StepSeq:
    """Build the lexicographically least member of the class that generated g,
    step by step, reading only the structure.

    At each stage, over the unconsumed occurrences X, admissible fronts are

      Z(X) = { nonempty Y of minimal (cmt n wc) occurrences:
               no cmt pair inside Y, nothing outside Y weakly below Y }

    and the next step is the least label image of Z(X) in the step order.
    Raises EmptyZ if no front is admissible or the finished sequence fails to
    regenerate g (the input was not induced by any step sequence), and
    CarrierTooLarge when the minima set is too big to enumerate subsets of.
    """
    prec = (g.cmt & g.wc).pairs
    cmt, wc = g.cmt.pairs, g.wc.pairs
    remaining = set(g.carrier)
    steps: list[Step] = []
    fronts: list[frozenset] = []
    while remaining:
        mins = sorted(
            (x for x in remaining if not any((y, x) in prec for y in remaining)),
            key=repr,
        )
        if len(mins) > mins_cap:
            raise CarrierTooLarge(f"{len(mins)} minimal occurrences exceed cap {mins_cap}")
        best_label = best_key = best_front = None
        for picked in _nonempty_subsets(mins):
            front = frozenset(picked)
            if any((a, b) in cmt for a in front for b in front):
                continue
            rest = remaining - front
            if any((b, a) in wc for a in front for b in rest):
                continue
            labels = frozenset(label(a) for a in front)
            if len(labels) != len(front) or not alphabet.is_step(labels):
                continue  # not realizable as one step; genuine inputs never hit this
            key = step_order_key(alphabet, labels)
            if best_key is None or key < best_key:
                best_label, best_key, best_front = labels, key, front
        if best_front is None:
            raise EmptyZ(f"no admissible front among minima {sorted(map(repr, mins))}")
        steps.append(best_label)
        fronts.append(best_front)
        remaining -= best_front
    result = tuple(steps)
    _check_regenerates(alphabet, g, result, fronts)
    return result


def _check_regenerates(alphabet: GAlphabet, g: GsoStructure, s: StepSeq, fronts) -> None:
    """The found sequence must induce g back, up to renaming each carrier
    point to its (label, occurrence index) under the block order."""
    seen: dict = {}
    rename = {}
    for front in fronts:
        for x in front:
            e = label(x)
            seen[e] = seen.get(e, 0) + 1
            rename[x] = (e, seen[e])
    rebuilt = gso_of_stepseq(alphabet, s)
    ok = (
        rebuilt.carrier == frozenset(rename.values())
        and rebuilt.cmt.pairs == frozenset((rename[a], rename[b]) for a, b in g.cmt.pairs)
        and rebuilt.wc.pairs == frozenset((rename[a], rename[b]) for a, b in g.wc.pairs)
    )
    if not ok:
        raise EmptyZ("structure is not induced by any step sequence over this alphabet")


# --------------------------------------------------------------------------
# serializability of a single step around a chosen event
# --------------------------------------------------------------------------

def shed_left(alphabet: GAlphabet, step: Step, event) -> tuple[Step, Step]:
    """Split step ~ (left)(kept) with event in kept and kept smallest; the
    left part is empty when nothing around event serializes leftward.

    The family of admissible kept-parts is closed under intersection, so the
    smallest one is their common intersection.
    """
    ser = alphabet.ser
    candidates = [
        d
        for d in _proper_subsets_with(step, event)
        if all((x, y) in ser for x in step - d for y in d)
    ]
    if not candidates:
        return frozenset(), step
    kept = frozenset.intersection(*candidates)
    assert kept in candidates
    return step - kept, kept


def shed_right(alphabet: GAlphabet, step: Step, event) -> tuple[Step, Step]:
    """Split step ~ (kept)(right) with event in kept and kept smallest."""
    ser = alphabet.ser
    candidates = [
        d
        for d in _proper_subsets_with(step, event)
        if all((x, y) in ser for x in d for y in step - d)
    ]
    if not candidates:
        return step, frozenset()
    kept = frozenset.intersection(*candidates)
    assert kept in candidates
    return kept, step - kept


def _proper_subsets_with(step: Step, event) -> Iterable[Step]:
    """All proper subsets of the step that contain the event."""
    assert event in step
    rest = sorted(step - {event}, key=repr)
    full = (1 << len(rest)) - 1
    for mask in range(full + 1):
        if mask == full:
            continue  # that would be the whole step again
        yield frozenset(x for i, x in enumerate(rest) if mask & (1 << i)) | {event}


def step_core(alphabet: GAlphabet, step: Step, event) -> tuple[tuple, Step, tuple]:
    """Alternately shed serializable material to the left and right of event
    until neither side moves: step ~ left parts + core + right parts, with the
    core not serializable around event in either direction."""
    core = alphabet.require_step(step)
    left: list[Step] = []
    right: list[Step] = []
    while True:
        gone, kept = shed_left(alphabet, core, event)
        if gone:
            left.append(gone)
            core = kept
            continue
        kept, gone = shed_right(alphabet, core, event)
        if gone:
            right.insert(0, gone)
            core = kept
            continue
        return tuple(left), core, tuple(right)


def core_factorization(alphabet: GAlphabet, step: Step, event) -> StepSeq:
    """The step sequence witnessing step_core: left parts, core, right parts."""
    left, core, right = step_core(alphabet, step, event)
    return (*left, core, *right)
