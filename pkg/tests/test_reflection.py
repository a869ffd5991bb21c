import pytest
from hypothesis import given, strategies as st

from superweyl.defseq import has_chain_shape
from superweyl.reflection import (
    FundamentalSystem,
    apply_generator,
    canonical_key,
    even_reflect_vector,
    generators,
    odd_reflect_ordered,
    standard_system,
)
from superweyl.rootspace import pairing, rank

from conftest import borels, catalog, vec

NAMES = ("gl(2|2)", "spo(4|4)", "spo(4|2)", "spo(2|5)", "D(2,1)", "F(4)", "G(3)")


def test_fundamental_system_rejects_dependent_roots():
    with pytest.raises(ValueError):
        FundamentalSystem((vec(1, -1), vec(-1, 1)))


@given(st.permutations(range(3)))
def test_canonical_key_ignores_order(perm):
    roots = [vec(1, -1, 0), vec(0, 1, -1), vec(0, 0, 2)]
    fs = FundamentalSystem(tuple(roots))
    other = FundamentalSystem(tuple(roots[i] for i in perm))
    assert fs.same_borel(other)
    assert fs.canonical_key == canonical_key(other.ordered_roots)


def test_even_reflection_formula():
    cat = catalog("spo(2|3)")
    # s_{e1} sends d1 - e1 to d1 + e1
    assert even_reflect_vector(cat.form, vec(0, 1), vec(1, -1)) == vec(1, 1)
    with pytest.raises(ValueError):
        even_reflect_vector(cat.form, vec(1, -1), vec(1, 0))


def test_odd_reflection_keeps_positions():
    cat = catalog("gl(1|2)")
    roots = [vec(1, -1, 0), vec(0, 1, -1)]
    assert odd_reflect_ordered(cat.form, roots, 0) == [vec(-1, 1, 0), vec(1, 0, -1)]


@pytest.mark.parametrize("name", NAMES)
def test_even_reflections_permute_roots(name):
    cat = catalog(name)
    for g in generators(cat):
        if not g.is_odd:
            assert {even_reflect_vector(cat.form, g.root, r) for r in cat.roots} == cat.roots


@pytest.mark.parametrize("name", NAMES)
@given(data=st.data())
def test_generators_are_involutions_and_stay_in_roots(name, data):
    cat = catalog(name)
    fs = data.draw(st.sampled_from(borels(name).systems))
    g = data.draw(st.sampled_from(generators(cat)))
    img = apply_generator(cat, g, fs)
    assert set(img.ordered_roots) <= cat.roots
    assert rank(img.ordered_roots) == len(img)
    assert apply_generator(cat, g, img).canonical_key == fs.canonical_key


def test_odd_generator_fixes_systems_without_its_root():
    cat = catalog("gl(1|2)")
    odd = next(g for g in generators(cat) if g.is_odd)
    for fs in borels("gl(1|2)"):
        if odd.root not in fs.ordered_roots and -odd.root not in fs.ordered_roots:
            assert apply_generator(cat, odd, fs) is fs


@pytest.mark.parametrize("name", ("spo(4|4)", "spo(6|2)", "spo(4|5)", "spo(2|5)", "gl(2|3)"))
def test_reachable_systems_keep_the_chain_shape(name):
    cat = catalog(name)
    assert all(has_chain_shape(cat, fs) for fs in borels(name))


def test_standard_system_is_simple():
    for name in NAMES:
        cat = catalog(name)
        fs = standard_system(cat)
        odd = [r for r in fs if pairing(cat.form, r, r).is_zero()]
        assert len(odd) == 1
