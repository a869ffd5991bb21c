import pytest
from hypothesis import given, strategies as st

from superweyl.catalog import AlgebraSpec, Family, build_catalog, parse_spec
from superweyl.enumerator import (
    MAX_BORELS,
    BorelSet,
    TooLargeError,
    enumerate_borels,
    enumerate_borels_oracle,
    expected_count,
)
from superweyl.reflection import standard_system
from superweyl.rootspace import rank

from conftest import borels, catalog


def _rank_specs(max_rank):
    for k in range(2, max_rank + 1):
        for m in range(1, k):
            yield f"gl({m}|{k - m})"
            yield f"spo({2 * m}|{2 * (k - m)})"
            yield f"spo({2 * m}|{2 * (k - m) + 1})"


RANK4 = sorted(set(_rank_specs(4)) | {"spo(2|2)"})


@pytest.mark.parametrize("name", RANK4)
def test_count_matches_formula(name):
    assert len(borels(name)) == expected_count(parse_spec(name))


@pytest.mark.parametrize("name", RANK4 + ["D(2,1)", "D(2,1;2)", "D(2,1;1/3)", "F(4)", "G(3)"])
def test_oracle_agrees(name):
    assert borels(name).keys() == enumerate_borels_oracle(catalog(name)).keys()


@pytest.mark.parametrize("name", ("gl(2|2)", "spo(4|4)", "spo(2|5)", "G(3)"))
def test_systems_have_full_rank(name):
    cat = catalog(name)
    for fs in borels(name):
        assert len(fs) == cat.rank
        assert rank(fs.ordered_roots) == cat.rank


def test_formulas():
    assert expected_count(parse_spec("gl(2|3)")) == 120
    assert expected_count(parse_spec("spo(4|4)")) == 288
    assert expected_count(parse_spec("spo(2|4)")) == 32
    assert expected_count(parse_spec("spo(4|2)")) == 40
    assert expected_count(parse_spec("spo(4|3)")) == 48
    assert expected_count(parse_spec("F(4)")) is None


def test_index_is_consistent():
    b = borels("spo(4|4)")
    for i, fs in enumerate(b):
        assert b.index[fs.canonical_key] == i
        assert b.id_of(fs) == i
    with pytest.raises(ValueError):
        BorelSet([b[0], b[0]])


def test_deterministic_ids():
    cat = build_catalog(parse_spec("spo(4|3)"))
    a, b = enumerate_borels(cat), enumerate_borels(cat)
    assert [fs.canonical_key for fs in a] == [fs.canonical_key for fs in b]
    assert a.id_of(standard_system(cat)) == b.id_of(standard_system(cat))


def test_guard_refuses_huge_sets():
    spec = AlgebraSpec(Family.GL, 6, 6)
    assert expected_count(spec) > MAX_BORELS
    with pytest.raises(TooLargeError):
        enumerate_borels(build_catalog(spec))


@given(st.integers(1, 4), st.integers(2, 4))
def test_spo_formula_is_a_positive_integer(m, n):
    c = expected_count(AlgebraSpec(Family.SPO_D, m, n))
    assert isinstance(c, int) and c > 0


@pytest.mark.parametrize("alpha", ["2", "1/3", "-2/5"])
def test_concrete_alpha_matches_generic_count(alpha):
    assert len(borels(f"D(2,1;{alpha})")) == len(borels("D(2,1)"))
