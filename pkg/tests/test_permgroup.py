import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from superweyl import _pykernels as pyk
from superweyl import kernels as K
from superweyl.permgroup import (
    GeneratorTable,
    RelationSyntaxError,
    as_permutation,
    brute_force_order,
    check_relations,
    compose,
    contains,
    cycle_type,
    cycles,
    element_order,
    evaluate_word,
    group_order,
    identity,
    orbit_length,
    parse_relations,
    parse_word,
    schreier_sims,
)

from conftest import SMALL, borels, table

try:
    from superweyl import _ckernels as ck
except ImportError:  # pragma: no cover - build without Cython
    ck = None


def perms(n):
    return st.permutations(range(n)).map(tuple)


def test_compose_applies_right_argument_first():
    p, q = (1, 2, 0), (0, 2, 1)
    assert compose(p, q) == (1, 0, 2)
    assert compose(p, q)[2] == p[q[2]]
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


def test_as_permutation_checks_bijection():
    assert as_permutation([2, 0, 1]) == (2, 0, 1)
    with pytest.raises(ValueError):
        as_permutation([0, 0, 1])


def test_cycle_helpers():
    p = (1, 2, 0, 4, 3, 5)
    assert cycles(p) == [(0, 1, 2), (3, 4)]
    assert cycle_type(p) == [3, 2]
    assert element_order(p) == 6
    assert orbit_length(p, 3) == 2
    assert orbit_length(p, 5) == 1


def test_generator_table_validates_involutions():
    with pytest.raises(ValueError):
        GeneratorTable(("x",), ((1, 2, 0),), (False,))
    t = GeneratorTable(("x", "y"), ((1, 0, 2), (0, 2, 1)), (True, False))
    assert t.degree == 3
    assert t.even_part().labels == ("y",)
    with pytest.raises(KeyError):
        t.perm("z")


@given(perms(9), perms(9))
def test_pure_kernels_compose(p, q):
    assert pyk.compose(p, q) == tuple(p[i] for i in q)
    assert pyk.compose(p, pyk.invert(p)) == identity(9)
    assert pyk.power(p, element_order(p)) == identity(9)


@pytest.mark.skipif(ck is None, reason="compiled kernels not built")
@given(perms(12), perms(12), st.integers(0, 50))
def test_compiled_kernels_match_pure(p, q, e):
    assert ck.compose(p, q) == pyk.compose(p, q)
    assert ck.invert(p) == pyk.invert(p)
    assert ck.is_identity(p) == pyk.is_identity(p)
    assert sorted(ck.cycle_lengths(p)) == sorted(pyk.cycle_lengths(p))
    assert ck.element_order(p) == pyk.element_order(p)
    assert ck.power(p, e) == pyk.power(p, e)
    assert ck.orbit_transversal([p, q], 0) == pyk.orbit_transversal([p, q], 0)


@pytest.mark.skipif(ck is None, reason="compiled kernels not built")
@settings(max_examples=30)
@given(st.lists(perms(7), min_size=1, max_size=3))
def test_compiled_closure_matches_pure(gens):
    assert ck.closure_size(gens, 10**5) == pyk.closure_size(gens, 10**5)


def test_closure_limit():
    gens = [(1, 0, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6, 0)]
    assert K.closure_size(gens, 100) == -1
    assert K.closure_size(gens, 10**4) == factorial(7)
    with pytest.raises(ValueError):
        K.closure_size([tuple(range(300))], 10)


@settings(max_examples=60)
@given(st.integers(2, 8).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=3)))
def test_schreier_sims_matches_closure(gens):
    n = brute_force_order(gens)
    res = group_order(gens)
    assert res.order == n
    chain = schreier_sims(gens)
    for g in gens:
        assert contains(chain, g)


def test_known_orders():
    swap = (1, 0, 2, 3, 4)
    cyc = (1, 2, 3, 4, 0)
    assert group_order([swap, cyc]).order == 120
    assert group_order([cyc]).order == 5
    assert group_order([identity(4)]).order == 1
    dihedral = [(0, 4, 3, 2, 1), (1, 0, 4, 3, 2)]
    assert group_order(dihedral).order == 10
    chain = schreier_sims([cyc])
    assert not contains(chain, swap)


@pytest.mark.parametrize("name", SMALL)
def test_generator_tables(name):
    t = table(name)
    assert t.degree == len(borels(name))
    res = group_order(t)
    # a multiple of each generator order that divides |B|!
    assert res.order % 2 == 0
    assert factorial(t.degree) % res.order == 0


@pytest.mark.parametrize("name", ("gl(1|2)", "gl(1|3)", "spo(2|2)", "spo(2|3)", "spo(2|5)"))
def test_schreier_sims_matches_closure_on_tables(name):
    assert group_order(table(name)).order == brute_force_order(table(name))


@pytest.mark.parametrize("name", ("gl(2|2)", "spo(4|4)", "spo(4|3)", "D(2,1)", "G(3)"))
def test_short_words_are_faithful(name):
    t = table(name)
    idx = range(len(t))
    for k in (1, 2, 3):
        for word in itertools.product(idx, repeat=k):
            if any(word[i] == word[i + 1] for i in range(k - 1)):
                continue
            p = evaluate_word(t, [t.labels[i] for i in word])
            assert not K.is_identity(p), word


def test_parse_word():
    assert parse_word("(c a)^3 b") == list("cacacab")
    assert parse_word("a ((b c)^2 a)^2") == list("abcbcabcbca")
    assert parse_word("x y = 1", {"x": "r[d1-e1]"}) == ["r[d1-e1]", "y"]
    assert parse_word("r[d1-e1] r[e1-e2]") == ["r[d1-e1]", "r[e1-e2]"]
    assert parse_word("a^0 b") == ["b"]
    for bad in ("(a b", "a b)", "^2", "a^-1"):
        with pytest.raises(RelationSyntaxError):
            parse_word(bad)


def test_parse_relations():
    rf = parse_relations(
        "# comment\nalgebra: gl(1|2)\na := r[d1-e1]\nb := r[e1-e2]\n"
        "(a b)^6\n(a b)^3 a b a  # inline comment\na^2 = 1\n"
    )
    assert rf.algebra == "gl(1|2)"
    assert rf.aliases == {"a": "r[d1-e1]", "b": "r[e1-e2]"}
    first, second, third = rf.relations
    assert (first.word, first.exponent) == (("r[d1-e1]", "r[e1-e2]"), 6)
    assert second.exponent == 1 and len(second.word) == 9
    assert third.word == ("r[d1-e1]",) * 2
    assert check_relations(table("gl(1|2)"), rf.relations) == [True, False, True]


def test_outer_power_needs_one_group():
    rf = parse_relations("(a b) (b a)^2")
    assert rf.relations[0].exponent == 1
    assert rf.relations[0].word == tuple("abbaba")


def test_evaluate_word_order():
    t = table("spo(2|2)")
    x, y = t.labels
    assert evaluate_word(t, [x, y]) == compose(t.perm(x), t.perm(y))
    assert evaluate_word(t, []) == identity(t.degree)


def test_pure_backend_end_to_end():
    import os
    import subprocess
    import sys

    code = (
        "from superweyl import kernels;"
        "from superweyl.catalog import build_catalog, parse_spec;"
        "from superweyl.enumerator import enumerate_borels;"
        "from superweyl.permgroup import build_generator_table, group_order;"
        "c=build_catalog(parse_spec('spo(4|3)'));"
        "print(kernels.BACKEND, group_order(build_generator_table(c, enumerate_borels(c))).order)"
    )
    env = dict(os.environ, SUPERWEYL_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    assert out == ["python", str(group_order(table("spo(4|3)")).order)]
