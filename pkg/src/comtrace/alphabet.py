"""Alphabets for traces, comtraces and generalized comtraces.

A g-comtrace alphabet is (E, sim, ser, inl) where

* sim ("simultaneity") is irreflexive and symmetric: events that may occur
  in one step;
* ser ("serializability") is a subset of sim, genuinely directed:
  (a, b) in ser means the step {a, b} may be serialized to a-then-b;
* inl ("interleaving") is irreflexive and symmetric, disjoint from sim:
  the two orders are equivalent but the events never share a step.

inl = empty gives a comtrace alphabet; additionally sim = ser gives the
lifted form of a Mazurkiewicz trace alphabet.

Event labels are ordinary strings in user-facing alphabets, but any hashable,
orderable value is accepted: the structure-to-comtrace constructions build
alphabets whose "events" are occurrence pairs like ("a", 1).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Hashable, Iterable

from .errors import (
    NotAStep,
    ReflexivePair,
    SerNotInSim,
    SimInlOverlap,
    UniverseTooLarge,
    UnknownEvent,
)

Event = Hashable
Pair = tuple[Event, Event]
Step = frozenset  # frozenset[Event]

STEP_UNIVERSE_CAP = 2 ** 16


def event_text(e: Event) -> str:
    """Render an event label: plain strings as-is, occurrences as ``a.1``."""
    if isinstance(e, tuple):
        return f"{e[0]}.{e[1]}"
    return str(e)


@dataclass(frozen=True)
class GAlphabet:
    """A validated (E, sim, ser, inl) alphabet with a fixed total event order.

    ``order`` is the total order <E used everywhere a tie must be broken
    deterministically (step rendering, the step order, canonical choices).
    It defaults to the natural sort of the labels; construct via
    :func:`galphabet` which validates all invariants.
    """

    events: frozenset
    sim: frozenset
    ser: frozenset
    inl: frozenset
    order: tuple

    # -- ordering helpers ----------------------------------------------

    def key(self, e: Event) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise UnknownEvent(f"unknown event {event_text(e)!r}") from None

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {e: i for i, e in enumerate(self.order)}
            self.__dict__["_index_cache"] = idx
        return idx

    def sort_events(self, events: Iterable[Event]) -> list:
        return sorted(events, key=self.key)

    def with_order(self, order: Iterable[Event]) -> "GAlphabet":
        """The same alphabet under a different total event order."""
        order = tuple(order)
        if set(order) != set(self.events) or len(order) != len(self.events):
            raise UnknownEvent("order must list every event exactly once")
        return replace(self, order=order)

    # -- classification ------------------------------------------------

    @property
    def is_comtrace(self) -> bool:
        return not self.inl

    @property
    def is_trace(self) -> bool:
        return not self.inl and self.sim == self.ser

    # -- steps -----------------------------------------------------------

    def is_step(self, members: Iterable[Event]) -> bool:
        ms = frozenset(members)
        if not ms or any(e not in self.events for e in ms):
            return False
        return all((a, b) in self.sim for a in ms for b in ms if a != b)

    def require_step(self, members: Iterable[Event]) -> Step:
        members = frozenset(members)
        for e in members:
            if e not in self.events:
                raise UnknownEvent(f"unknown event {event_text(e)!r}")
        if not members:
            raise NotAStep("steps are nonempty")
        for a in members:
            for b in members:
                if a != b and (a, b) not in self.sim:
                    raise NotAStep(
                        f"{event_text(a)} and {event_text(b)} may not occur simultaneously"
                    )
        return members

    def steps_universe(self, cap: int = STEP_UNIVERSE_CAP) -> list[Step]:
        """All nonempty sim-cliques, sorted by size then lexicographically by <E."""
        ordered = list(self.order)
        found: list[tuple] = []

        def grow(clique: list, start: int) -> None:
            if len(found) > cap:
                raise UniverseTooLarge(f"more than {cap} steps")
            if clique:
                found.append(tuple(clique))
            for i in range(start, len(ordered)):
                e = ordered[i]
                if all((c, e) in self.sim for c in clique):
                    clique.append(e)
                    grow(clique, i + 1)
                    clique.pop()

        grow([], 0)
        found.sort(key=lambda c: (len(c), tuple(self.key(e) for e in c)))
        return [frozenset(c) for c in found]


def _symmetrize(pairs: Iterable[Pair]) -> frozenset:
    out = set()
    for a, b in pairs:
        out.add((a, b))
        out.add((b, a))
    return frozenset(out)


def galphabet(
    events: Iterable[Event],
    sim: Iterable[Pair] = (),
    ser: Iterable[Pair] = (),
    inl: Iterable[Pair] = (),
    order: Iterable[Event] | None = None,
) -> GAlphabet:
    """Validate and build a g-comtrace alphabet.

    sim and inl are auto-symmetrized; ser is taken exactly as written.
    Raises the first violated invariant: UnknownEvent, ReflexivePair,
    SerNotInSim or SimInlOverlap.
    """
    events = frozenset(events)
    sim_s = _symmetrize(sim)
    ser_s = frozenset(tuple(p) for p in ser)
    inl_s = _symmetrize(inl)

    for name, rel in (("sim", sim_s), ("ser", ser_s), ("inl", inl_s)):
        for a, b in rel:
            if a not in events or b not in events:
                missing = a if a not in events else b
                raise UnknownEvent(f"unknown event {event_text(missing)!r} in {name}")
            if a == b:
                raise ReflexivePair(f"({event_text(a)},{event_text(b)}) in {name}")
    for p in ser_s:
        if p not in sim_s:
            raise SerNotInSim(f"({event_text(p[0])},{event_text(p[1])}) in ser but not in sim")
    overlap = sim_s & inl_s
    if overlap:
        a, b = min(overlap)
        raise SimInlOverlap(f"({event_text(a)},{event_text(b)}) in both sim and inl")

    if order is None:
        order = tuple(sorted(events))
    else:
        order = tuple(order)
        if set(order) != set(events) or len(order) != len(events):
            raise UnknownEvent("order must list every event exactly once")
    return GAlphabet(events=events, sim=sim_s, ser=ser_s, inl=inl_s, order=order)


@dataclass(frozen=True)
class DerivedRelations:
    ind: frozenset  # ser intersected with its inverse: fully serializable both ways
    syn: frozenset  # simultaneous but not serializable in either direction
    syn_steps: tuple  # steps all of whose distinct pairs are synchronous


def derived_relations(alphabet: GAlphabet) -> DerivedRelations:
    """ind = ser n ser^-1, syn = sim \\ (ser u ser^-1), and the synchronous steps.

    Singleton steps are (vacuously) synchronous: they cannot be simulated by
    any sequence of proper sub-steps.
    """
    ser_inv = frozenset((b, a) for a, b in alphabet.ser)
    ind = alphabet.ser & ser_inv
    syn = alphabet.sim - (alphabet.ser | ser_inv)
    syn_steps = tuple(
        s
        for s in alphabet.steps_universe()
        if all((a, b) in syn for a in s for b in s if a != b)
    )
    return DerivedRelations(ind=ind, syn=syn, syn_steps=syn_steps)


def lift_trace_alphabet(
    events: Iterable[Event],
    ind: Iterable[Pair],
    order: Iterable[Event] | None = None,
) -> GAlphabet:
    """The comtrace alphabet (E, ind, ind) of a trace alphabet (E, ind)."""
    ind_s = _symmetrize(ind)
    return galphabet(events, sim=ind_s, ser=ind_s, inl=(), order=order)


def lift_word(word: Iterable[Event]) -> tuple[Step, ...]:
    """A sequence of events as the step sequence of its singletons."""
    return tuple(frozenset([e]) for e in word)
