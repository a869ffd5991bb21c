from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from superweyl.catalog import build_catalog, parse_spec
from superweyl.enumerator import enumerate_borels
from superweyl.permgroup import build_generator_table, cycles
from superweyl.reflection import canonical_key
from superweyl.rootspace import RootVector

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SMALL = (
    "gl(1|2)", "gl(2|1)", "gl(1|3)", "gl(2|2)", "gl(3|1)",
    "spo(2|2)", "spo(2|4)", "spo(4|2)", "spo(2|3)", "spo(4|3)", "spo(2|5)",
)


@lru_cache(maxsize=None)
def catalog(name: str):
    return build_catalog(parse_spec(name))


@lru_cache(maxsize=None)
def borels(name: str):
    return enumerate_borels(catalog(name))


@lru_cache(maxsize=None)
def table(name: str):
    return build_generator_table(catalog(name), borels(name))


def vec(*coords) -> RootVector:
    return RootVector(tuple(Fraction(c) for c in coords))


def system_id(name: str, rows) -> int:
    return borels(name).index[canonical_key([vec(*r) for r in rows])]


def relabel(p, order) -> list[tuple[int, ...]]:
    """Cycles of ``p`` after renaming ``order[k]`` to ``k + 1``."""
    pos = {b: k for k, b in enumerate(order)}
    q = tuple(pos[p[b]] for b in order)
    return [tuple(x + 1 for x in c) for c in cycles(q)]


@pytest.fixture
def golden_env(tmp_path, monkeypatch):
    monkeypatch.setenv("SUPERWEYL_GOLDEN_DIR", str(tmp_path))
    return tmp_path


# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in range(1, 10):
        ok, detail = ACCEPTANCE.get(k, (False, "did not run"))
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
