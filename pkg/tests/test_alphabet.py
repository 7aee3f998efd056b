"""Alphabet validation, derived relations, and the step universe."""
from __future__ import annotations

import pytest

from comtrace import derived_relations, event_text, galphabet, lift_trace_alphabet, lift_word
from comtrace.errors import ReflexivePair, SerNotInSim, SimInlOverlap, UnknownEvent

from conftest import SER_ONEWAY, SYNC_MIX, TINY_INL


def test_relations_are_symmetrized_and_validated():
    a = galphabet("ab", sim={("a", "b")}, ser={("a", "b")})
    assert ("b", "a") in a.sim
    assert ("b", "a") not in a.ser
    assert a.is_comtrace


def test_ser_outside_sim_rejected():
    with pytest.raises(SerNotInSim):
        galphabet("ab", ser={("a", "b")})


def test_sim_inl_overlap_rejected():
    with pytest.raises(SimInlOverlap):
        galphabet("ab", sim={("a", "b")}, inl={("a", "b")})


def test_reflexive_pair_rejected():
    with pytest.raises(ReflexivePair):
        galphabet("ab", sim={("a", "a")})


def test_unknown_event_in_relation():
    with pytest.raises(UnknownEvent):
        galphabet("ab", sim={("a", "z")})


def test_order_must_cover_events():
    with pytest.raises(UnknownEvent):
        galphabet("ab", order="a")


def test_is_step_requires_sim_clique():
    assert SER_ONEWAY.is_step(frozenset("bc"))
    assert not SER_ONEWAY.is_step(frozenset("ab"))
    assert not SER_ONEWAY.is_step(frozenset())


def test_steps_universe_sorted_by_size_then_order():
    assert TINY_INL.steps_universe() == [
        frozenset("a"), frozenset("b"), frozenset("c"), frozenset("ac"),
    ]


def test_derived_relations_partition_sim():
    d = derived_relations(SYNC_MIX)
    # ind needs both directions serializable
    assert d.ind == frozenset({("a", "b"), ("b", "a")})
    # synchronous pairs are simultaneous but never serializable
    assert d.syn == frozenset({("a", "d"), ("d", "a")})
    assert d.syn | d.ind <= SYNC_MIX.sim


def test_synchronous_steps_include_singletons():
    d = derived_relations(SYNC_MIX)
    # singletons qualify vacuously; {a,d} is the only bigger syn-clique
    assert d.syn_steps == (
        frozenset("a"), frozenset("b"), frozenset("c"),
        frozenset("d"), frozenset("e"), frozenset("ad"),
    )


def test_lifted_trace_alphabet_is_trace():
    t = lift_trace_alphabet("abc", ind={("b", "c")})
    assert t.is_trace and t.is_comtrace
    assert t.sim == t.ser == frozenset({("b", "c"), ("c", "b")})


def test_lift_word():
    assert lift_word("aba") == (frozenset("a"), frozenset("b"), frozenset("a"))


def test_event_text_handles_occurrences():
    assert event_text("a") == "a"
    assert event_text(("a", 2)) == "a.2"
