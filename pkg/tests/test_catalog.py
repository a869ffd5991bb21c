from fractions import Fraction

import pytest

from superweyl.catalog import (
    NO_ISOTROPIC_MSG,
    AlgebraSpec,
    Family,
    SpecError,
    build_catalog,
    format_root,
    parse_spec,
    positive_roots,
)
from superweyl.reflection import generators
from superweyl.rootspace import is_isotropic

from conftest import catalog, vec


@pytest.mark.parametrize(
    "text, family, m, n",
    [
        ("gl(2|3)", Family.GL, 2, 3),
        ("spo(4|4)", Family.SPO_D, 2, 2),
        ("spo(6|2)", Family.SPO_C, 3, 1),
        ("spo(2|5)", Family.SPO_B, 1, 2),
        (" spo( 4 | 3 ) ", Family.SPO_B, 2, 1),
        ("D(2,1)", Family.D21A, 0, 0),
        ("F(4)", Family.F4, 0, 0),
        ("G(3)", Family.G3, 0, 0),
    ],
)
def test_parse_spec(text, family, m, n):
    spec = parse_spec(text)
    assert (spec.family, spec.m, spec.n) == (family, m, n)
    assert parse_spec(str(spec)) == spec


def test_parse_alpha():
    spec = parse_spec("D(2,1;3/2)")
    assert spec.alpha == Fraction(3, 2)
    assert str(spec) == "D(2,1;3/2)"
    assert parse_spec("D(2,1;-2)").alpha == -2


@pytest.mark.parametrize(
    "text",
    ["gl(0|2)", "spo(3|2)", "spo(2|0)", "D(2,1;0)", "D(2,1;-1)", "D(2,1;1/0)", "E(8)", "gl(1,2)"],
)
def test_parse_spec_rejects(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_spo_odd_one_has_no_isotropic_roots():
    with pytest.raises(SpecError, match="no isotropic roots"):
        parse_spec("spo(2|1)")
    assert "isotropic" in NO_ISOTROPIC_MSG


def test_spec_validation():
    with pytest.raises(SpecError):
        AlgebraSpec(Family.SPO_D, 1, 1)
    with pytest.raises(SpecError):
        AlgebraSpec(Family.SPO_C, 1, 2)
    with pytest.raises(SpecError):
        AlgebraSpec(Family.GL, 1, 2, alpha=Fraction(2))


ALL = (
    "gl(1|2)", "gl(2|3)", "gl(3|1)", "spo(2|2)", "spo(6|2)", "spo(2|4)", "spo(4|4)",
    "spo(2|3)", "spo(4|5)", "spo(6|3)", "D(2,1)", "D(2,1;2)", "F(4)", "G(3)",
)


@pytest.mark.parametrize("name", ALL)
def test_catalog_invariants(name):
    cat = catalog(name)
    assert all(-r in cat.roots for r in cat.roots)
    assert cat.odd_roots <= cat.roots
    for r in cat.roots:
        if is_isotropic(cat.form, r):
            assert r in cat.odd_roots
    assert set(cat.extended_pi) <= cat.roots
    assert len(positive_roots(cat, cat.standard_pi)) * 2 == len(cat.roots)


@pytest.mark.parametrize("name", ALL)
def test_extended_system_shape(name):
    cat = catalog(name)
    if cat.family in (Family.GL, Family.SPO_C):
        assert cat.extended_pi == cat.standard_pi
    else:
        assert cat.extended_pi[1:] == cat.standard_pi
        assert cat.extended_pi[0] not in cat.standard_pi


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (2, 3), (3, 1)])
def test_gl_odd_root_count(m, n):
    assert len(catalog(f"gl({m}|{n})").odd_roots) == 2 * m * n


@pytest.mark.parametrize("m, n", [(1, 1), (2, 2), (1, 2), (3, 1)])
def test_spo_even_odd_root_count(m, n):
    assert len(catalog(f"spo({2 * m}|{2 * n})").odd_roots) == 4 * m * n


@pytest.mark.parametrize("m, n", [(1, 1), (2, 2), (1, 2), (3, 1)])
def test_spo_odd_odd_root_count(m, n):
    assert len(catalog(f"spo({2 * m}|{2 * n + 1})").odd_roots) == 4 * m * n + 2 * m


@pytest.mark.parametrize(
    "name, label",
    [
        ("gl(2|3)", "d2-e1"),
        ("spo(4|4)", "d2-e1"),
        ("spo(4|5)", "d2-e1"),
        ("spo(6|2)", "-d1+e1"),
    ],
)
def test_unique_isotropic_simple_root(name, label):
    cat = catalog(name)
    iso = [r for r in cat.standard_pi if is_isotropic(cat.form, r)]
    assert [format_root(cat, r) for r in iso] == [label]


@pytest.mark.parametrize(
    "name, labels",
    [
        ("gl(2|2)", ["r[d1-d2]", "r[d2-e1]", "r[e1-e2]"]),
        ("spo(4|4)", ["r[-2d1]", "r[d1-d2]", "r[d2-e1]", "r[e1-e2]", "r[e1+e2]"]),
        ("spo(4|2)", ["r[-d1+e1]", "r[d1-d2]", "r[2d2]"]),
        ("spo(2|5)", ["r[-2d1]", "r[d1-e1]", "r[e1-e2]", "r[e2]"]),
        ("D(2,1)", ["r[-2d]", "r[d+e1+e2]", "r[-2e1]", "r[-2e2]"]),
        ("F(4)", ["r[-d]", "r[(e1+e2+e3+d)/2]", "r[-e3]", "r[-e1+e3]", "r[e1-e2]"]),
        ("G(3)", ["r[-2d]", "r[d-e1]", "r[e2-e3]", "r[-e2]"]),
    ],
)
def test_generator_labels(name, labels):
    assert [g.label for g in generators(catalog(name))] == labels


def test_g3_labels_use_third_eps():
    cat = catalog("G(3)")
    # e1 + e2 = -e3 in this basis
    assert format_root(cat, vec(0, 1, 1)) == "-e3"
    assert format_root(cat, vec(1, 0, 0)) == "d"


def test_generators_are_odd_exactly_when_isotropic():
    for name in ALL:
        cat = catalog(name)
        for g in generators(cat):
            assert g.is_odd == is_isotropic(cat.form, g.root)


def test_exceptional_dimensions():
    assert build_catalog(parse_spec("F(4)")).dimension == 4
    assert build_catalog(parse_spec("G(3)")).dimension == 3
    assert len(catalog("F(4)").roots) == 36
    assert len(catalog("G(3)").roots) == 28
    assert len(catalog("D(2,1)").roots) == 14
