import itertools

import pytest
from hypothesis import given, strategies as st

from dmflip.errors import ParseError, StructuralError
from dmflip.matrix import GroundSet
from dmflip.setsystem import (
    DUALP,
    LOOPC,
    OPS,
    TWIST,
    FlipNormalForm,
    FlipWord,
    SetSystem,
    all_set_systems,
    apply_bulk,
    apply_word,
    dual_pivot,
    dual_pivot_all_explicit,
    loop_complement,
    loop_complement_all_explicit,
    max_sets,
    normalize_word,
    twist,
    twist_all_explicit,
)

from conftest import set_systems, words

AB = GroundSet(("a", "b"))


def ss(ground, *sets):
    return SetSystem.from_sets(ground, [tuple(s) for s in sets])


def naive_twist(M, x):
    return {frozenset(s) ^ frozenset(x) for s in M.members()}


def naive_loopc(M, u):
    fam = {frozenset(s) for s in M.members()}
    return fam ^ {s | {u} for s in fam if u not in s}


def test_twist_examples():
    M = ss(AB, "", "a", "ab")
    assert twist(M, ()) == M
    assert twist(twist(M, ["a"]), ["a"]) == M
    assert twist(M, ["a"]) == ss(AB, "a", "", "b")


def test_loop_complement_examples():
    M = ss(AB, "", "a", "ab")
    assert loop_complement(M, "b") == ss(AB, "", "a", "b")
    assert loop_complement(loop_complement(M, "a"), "a") == M
    empty = SetSystem(AB, 0)
    assert loop_complement(empty, "a") == empty and not empty.proper


def test_dual_pivot_examples():
    M = ss(AB, "", "a", "ab")
    assert dual_pivot(dual_pivot(M, "a"), "a") == M
    assert M.loop_complement("a").twist("a").loop_complement("a") == M.twist("a").loop_complement("a").twist("a")
    A = GroundSet(("a",))
    E = ss(A, "", "a")
    assert E.loop_complement("a") == ss(A, "")
    assert E.loop_complement("a").twist("a") == ss(A, "a")
    assert dual_pivot(E, "a") == ss(A, "a")


@given(set_systems(max_n=5), st.data())
def test_single_flips_match_definitions(M, data):
    u = data.draw(st.sampled_from(M.ground.labels))
    x = data.draw(st.integers(0, M.ground.full_mask))
    assert twist(M, x).as_frozensets() == naive_twist(M, M.ground.subset(x))
    assert loop_complement(M, u).as_frozensets() == naive_loopc(M, u)


@given(set_systems(max_n=5), st.data())
def test_flips_are_involutions(M, data):
    u = data.draw(st.sampled_from(M.ground.labels))
    for op in OPS:
        assert apply_word(M, FlipWord(((op, u), (op, u)))) == M


def test_s3_relations_exhaustive_small():
    for n in (1, 2):
        g = GroundSet.of_size(n)
        for M in all_set_systems(g):
            for u in g:
                r = FlipWord.parse(f"+{u} *{u}")
                assert M.apply_word(r + r + r) == M
                assert M.apply_word(FlipWord.parse(f"+{u} *{u} +{u}")) == M.apply_word(FlipWord.parse(f"*{u} +{u} *{u}"))
                # the two order-3 flips in their alternative spellings
                assert M.apply_word(r) == M.apply_word(FlipWord.parse(f"d{u} +{u}")) == M.apply_word(FlipWord.parse(f"*{u} d{u}"))
                s = FlipWord.parse(f"*{u} +{u}")
                assert M.apply_word(s) == M.apply_word(FlipWord.parse(f"+{u} d{u}")) == M.apply_word(FlipWord.parse(f"d{u} *{u}"))


@given(set_systems(min_n=2, max_n=5), st.data())
def test_flips_on_distinct_elements_commute(M, data):
    u, v = data.draw(st.permutations(M.ground.labels))[:2]
    for g, h in itertools.product(OPS, repeat=2):
        assert M.apply_word(FlipWord(((g, u), (h, v)))) == M.apply_word(FlipWord(((h, v), (g, u))))


@given(set_systems(max_n=5), st.data())
def test_bulk_is_order_independent(M, data):
    op = data.draw(st.sampled_from(OPS))
    x = data.draw(st.integers(0, M.ground.full_mask))
    labels = list(M.ground.subset(x))
    shuffled = data.draw(st.permutations(labels))
    assert apply_bulk(M, op, x) == M.apply_word(FlipWord.bulk(op, shuffled))


@given(set_systems(max_n=5))
def test_explicit_membership_rules(M):
    full = M.ground.full_mask
    assert M.apply_bulk(TWIST, full) == twist_all_explicit(M)
    assert M.apply_bulk(LOOPC, full) == loop_complement_all_explicit(M)
    assert M.apply_bulk(DUALP, full) == dual_pivot_all_explicit(M)
    assert (0 in M.apply_bulk(DUALP, full).masks()) == (len(M) % 2 == 1)


def test_apply_word_examples():
    M = ss(AB, "", "a", "ab")
    assert apply_word(M, FlipWord()) == M
    assert apply_word(M, FlipWord.parse("*a *a")) == M
    assert apply_word(M, FlipWord.parse("+a *b")) == apply_word(M, FlipWord.parse("*b +a"))
    with pytest.raises(StructuralError):
        apply_word(M, FlipWord.parse("*z"))


def test_normalize_examples():
    assert normalize_word(FlipWord.parse("*u")) == FlipNormalForm(GroundSet(("u",)), 0, 1, 0)
    assert normalize_word(FlipWord.parse("+u *u +u")) == FlipNormalForm(GroundSet(("u",)), 1, 1, 1)
    nf = normalize_word(FlipWord.parse("*u +u"))
    assert (nf.z1, nf.z2, nf.z3) == (0, 1, 1)
    assert str(nf) == "Z1=- Z2=u Z3=u"
    assert normalize_word(FlipWord.parse("du")) == normalize_word(FlipWord.parse("*u +u *u"))


def test_normalize_example_against_every_system_on_one_point():
    g = GroundSet(("u",))
    nf = normalize_word(FlipWord.parse("*u +u"), g)
    for M in all_set_systems(g):
        assert M.apply_word(FlipWord.parse("*u +u")) == M.apply_normal_form(nf)


def test_normal_forms_are_six_distinct_flips():
    g = GroundSet(("u",))
    spellings = ["", "+u", "*u", "*u +u", "+u *u", "+u *u +u"]
    actions = set()
    for s in spellings:
        w = FlipWord.parse(s)
        nf = normalize_word(w, g)
        assert nf.as_word() == w
        actions.add(tuple(M.apply_word(w).indicator for M in all_set_systems(g)))
    assert len(actions) == 6


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(set_systems(min_n=n, max_n=n), words(GroundSet.of_size(n).labels))))
def test_normalize_soundness(pair):
    M, w = pair
    nf = normalize_word(w, M.ground)
    assert nf.z1 & ~nf.z2 == 0
    assert M.apply_word(w) == M.apply_normal_form(nf)


def test_max_sets_examples():
    A = GroundSet(("a", "b"))
    assert max_sets(ss(A, "a")) == ss(A, "a")
    assert max_sets(ss(A, "", "a", "b")) == ss(A, "a", "b")


@given(set_systems(max_n=5), st.data())
def test_max_invariant_under_dual_pivot(M, data):
    x = data.draw(st.integers(0, M.ground.full_mask))
    assert max_sets(M) == max_sets(M.apply_bulk(DUALP, x))


def test_word_parsing():
    w = FlipWord.parse("*a +bc dd ∂a")
    assert w.letters == (("*", "a"), ("+", "bc"), ("d", "d"), ("d", "a"))
    assert str(w) == "*a +bc dd da"
    for bad in ("a", "*", "x1", "+"):
        with pytest.raises(ParseError):
            FlipWord.parse(bad)


def test_label_aware_set_system_equality():
    M = ss(AB, "a", "ab")
    N = ss(GroundSet(("b", "a")), "a", "ba")
    assert M == N and hash(M) == hash(N)
    assert M != ss(GroundSet(("a", "c")), "a", "ac")


def test_indicator_out_of_range():
    with pytest.raises(StructuralError):
        SetSystem(GroundSet(("a",)), 1 << 4)
