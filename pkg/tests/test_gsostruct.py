"""Generalized so-structures: axioms, the invariant construction, round trips,
the structural canonical form, and single-step serializability."""
from __future__ import annotations

import pytest

from comtrace import (
    enumerate_class,
    extensions_gso,
    g_canonical,
    gso_of_class,
    gso_of_stepseq,
    gso_structure,
    parse,
    render,
    semican,
    validate_gso,
)
from comtrace.errors import AxiomViolation, EmptyZ
from comtrace.gsostruct import (
    alphabet_of_gso,
    core_factorization,
    gcomtrace_of_gso,
    gso_from_extension,
    gso_from_orders,
    is_gso,
    shed_left,
    shed_right,
    step_core,
)
from comtrace.stepseq import order_of

from conftest import (
    CLIQUE_INL,
    CROSSING_GSO,
    DIAMOND,
    DIAMOND_INL,
    INL_PAIR,
    SYNC_MIX,
    TINY_INL,
    random_instance,
)

A1, A2 = ("a", 1), ("a", 2)
B1, C1, D1 = ("b", 1), ("c", 1), ("d", 1)


def fs(text):
    return frozenset(text)


def sym(pairs):
    return frozenset(pairs) | frozenset((b, a) for a, b in pairs)


# --- axioms ---------------------------------------------------------------

def test_gso_axioms():
    with pytest.raises(AxiomViolation) as e:
        validate_gso(gso_structure("ab", cmt={("a", "b")}, wc=set()))
    assert e.value.axiom == "G2"  # cmt must be symmetric
    with pytest.raises(AxiomViolation) as e:
        validate_gso(gso_structure("ab", cmt=set(), wc={("a", "a")}))
    assert e.value.axiom == "G1"
    assert is_gso(CROSSING_GSO)
    assert validate_gso(CROSSING_GSO) is CROSSING_GSO


def test_induced_so_slice():
    so = CROSSING_GSO.induced_so
    assert so.prec.pairs == CROSSING_GSO.cmt.pairs & CROSSING_GSO.wc.pairs
    assert so.wc.pairs == CROSSING_GSO.wc.pairs


# --- single-sequence construction -------------------------------------------

def test_pure_interleaving_structure():
    g = gso_of_stepseq(INL_PAIR, parse(INL_PAIR, "{a}{b}{c}"))
    assert g.cmt.pairs == {(A1, B1), (B1, A1)}
    assert g.wc.pairs == frozenset()


def test_small_mixed_structure():
    g = gso_of_stepseq(TINY_INL, parse(TINY_INL, "{b}{a,c}"))
    assert g.cmt.pairs == sym({(A1, B1), (B1, C1)})
    assert g.wc.pairs == {(B1, C1)}


def test_figure_structure_with_interleaving():
    g = gso_of_stepseq(DIAMOND_INL, parse(DIAMOND_INL, "{a,b}{c}{a,d}"))
    prec = {(A1, A2), (A1, C1), (A1, D1), (B1, A2), (B1, D1), (C1, A2), (C1, D1)}
    assert g.cmt.pairs == sym(prec)
    assert g.wc.pairs == (prec | {(A2, D1), (B1, C1), (D1, A2)}) - {(A1, C1)}
    # relative to the interleaving-free variant, a1 and c1 lose their weak
    # edge but keep the commutation edge
    plain = gso_of_stepseq(DIAMOND, parse(DIAMOND, "{a,b}{c}{a,d}"))
    assert (A1, C1) in plain.wc.pairs
    assert (A1, C1) not in g.wc.pairs
    assert (A1, C1) in g.cmt.pairs


def test_single_equals_class_intersection(rng):
    for _ in range(25):
        alph, s, cls = random_instance(
            rng, allow_inl=True, max_len=3, class_cap=200, weight_cap=6
        )
        g = gso_of_stepseq(alph, s)
        assert g == gso_of_class(alph, s)
        assert all(gso_of_stepseq(alph, m) == g for m in cls)


def test_distinct_classes_have_distinct_structures():
    u = parse(TINY_INL, "{a}{b}{c}")
    v = parse(TINY_INL, "{c}{b}{a}")
    assert gso_of_stepseq(TINY_INL, u) != gso_of_stepseq(TINY_INL, v)


# --- extensions and round trips ----------------------------------------------

def test_extensions_are_exactly_the_class_orders():
    s = parse(TINY_INL, "{a}{b}{c}")
    g = gso_of_stepseq(TINY_INL, s)
    cls = enumerate_class(TINY_INL, s)
    assert {e.pairs for e in extensions_gso(g)} == {order_of(m).pairs for m in cls}
    for e in extensions_gso(g):
        assert gso_from_extension(g, e) == g
    assert gso_from_orders(extensions_gso(g)) == g


def test_alphabet_read_off_structure():
    alph = alphabet_of_gso(CROSSING_GSO, order=tuple("abcde"))
    assert alph.sim == sym({("a", "b"), ("b", "c"), ("d", "e")})
    assert alph.ser == frozenset({("a", "b"), ("b", "a"), ("b", "c")})
    assert alph.inl == sym({("a", "c")})


def test_induced_gcomtrace_is_one_class():
    ind = gcomtrace_of_gso(CROSSING_GSO, order=tuple("abcde"))
    texts = {render(ind.alphabet, m) for m in ind.members}
    assert texts == {
        "{a,b}{c}{d,e}",
        "{a}{b,c}{d,e}",
        "{a}{b}{c}{d,e}",
        "{b,c}{a}{d,e}",
        "{b}{a}{c}{d,e}",
        "{b}{c}{a}{d,e}",
    }
    cls = enumerate_class(ind.alphabet, ind.members[0])
    assert set(cls.members) == set(ind.members)


# --- structural canonical form -------------------------------------------------

def test_semican_matches_class_minimum():
    for alph, text in [
        (TINY_INL, "{b}{a,c}"),
        (INL_PAIR, "{a,c}{b}"),
        (DIAMOND_INL, "{a,b}{c}{a,d}"),
        (DIAMOND, "{a}{b,c}{a,d}"),
    ]:
        s = parse(alph, text)
        g = gso_of_stepseq(alph, s)
        assert semican(alph, g) == g_canonical(alph, s)


def test_semican_rejects_underdetermined_structure():
    # a weak cycle that no step realizes: carrier points that must share a
    # step but whose labels are not simultaneous
    g = gso_structure(
        [A1, B1], cmt=set(), wc={(A1, B1), (B1, A1)}
    )
    with pytest.raises(EmptyZ):
        semican(TINY_INL, g)


# --- single-step serializability -----------------------------------------------

def test_synchronous_step_has_no_split():
    # neither (a,d) nor (d,a) serializes, so the core keeps both events
    assert shed_left(SYNC_MIX, fs("ad"), "a") == (frozenset(), fs("ad"))
    assert shed_right(SYNC_MIX, fs("ad"), "a") == (fs("ad"), frozenset())
    assert step_core(SYNC_MIX, fs("ad"), "a") == ((), fs("ad"), ())


def test_shedding_splits_serializable_clique():
    # in the all-ways-serializable clique, everything but the event itself
    # can be shed to one side
    left, kept = shed_left(CLIQUE_INL, fs("bcd"), "d")
    assert kept == fs("d") and left == fs("bc")
    seq = core_factorization(CLIQUE_INL, fs("bcd"), "d")
    assert seq[0] | seq[1] == fs("bcd") and seq[1] == fs("d")
    # the factorization stays inside the class of the original step
    assert seq in enumerate_class(CLIQUE_INL, (fs("bcd"),))


def test_core_factorization_identity_when_unsplittable():
    assert core_factorization(SYNC_MIX, fs("ad"), "d") == (fs("ad"),)
