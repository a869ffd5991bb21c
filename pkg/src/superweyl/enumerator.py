"""Enumeration of all fundamental systems reachable from the standard one."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from .catalog import AlgebraCatalog, AlgebraSpec, Family
from .reflection import (
    CanonicalKey,
    FundamentalSystem,
    apply_generator,
    generators,
    standard_system,
)
from .rootspace import RootVector, pairing

MAX_BORELS = 10**7


class TooLargeError(ValueError):
    pass


@dataclass
class BorelSet:
    """Fundamental systems sorted by canonical key; ids are list positions."""

    systems: list[FundamentalSystem]
    index: dict[CanonicalKey, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.systems = sorted(self.systems, key=lambda fs: fs.canonical_key)
        self.index = {fs.canonical_key: i for i, fs in enumerate(self.systems)}
        if len(self.index) != len(self.systems):
            raise ValueError("duplicate fundamental systems")

    def __len__(self) -> int:
        return len(self.systems)

    def __iter__(self):
        return iter(self.systems)

    def __getitem__(self, i: int) -> FundamentalSystem:
        return self.systems[i]

    def id_of(self, fs: FundamentalSystem) -> int:
        return self.index[fs.canonical_key]

    def keys(self) -> set[CanonicalKey]:
        return set(self.index)


def expected_count(spec: AlgebraSpec) -> Optional[int]:
    m, n, f = spec.m, spec.n, spec.family
    if f is Family.GL:
        return factorial(m + n)
    if f in (Family.SPO_D, Family.SPO_C):
        k = m + n
        c = Fraction(n, k) * 2 ** (k - 1) * factorial(k) + Fraction(m, k) * 2**k * factorial(k)
        assert c.denominator == 1
        return int(c)
    if f is Family.SPO_B:
        return 2 ** (m + n) * factorial(m + n)
    return None


def _guard(cat: AlgebraCatalog) -> None:
    c = expected_count(cat.spec)
    if c is not None and c > MAX_BORELS:
        raise TooLargeError(
            f"{cat.spec} has {c} fundamental systems, above the limit of {MAX_BORELS}"
        )


def enumerate_borels(cat: AlgebraCatalog) -> BorelSet:
    """Closure of the ordered standard system under the extended generators.

    Each Borel keeps the ordered form it was first reached with.
    """
    _guard(cat)
    gens = generators(cat)
    start = standard_system(cat)
    seen: dict[CanonicalKey, FundamentalSystem] = {start.canonical_key: start}
    queue = deque([start])
    while queue:
        fs = queue.popleft()
        for g in gens:
            img = apply_generator(cat, g, fs)
            if img.canonical_key not in seen:
                seen[img.canonical_key] = img
                queue.append(img)
    return BorelSet(list(seen.values()))


def _oracle_neighbours(cat: AlgebraCatalog, system: frozenset[RootVector]):
    form = cat.form
    for a in system:
        aa = pairing(form, a, a)
        if aa.is_zero():
            # {b : (b,a)=0, b != a} u {b+a : (b,a) != 0} u {-a}
            new = {-a}
            for b in system:
                if b == a:
                    continue
                new.add(b if pairing(form, b, a).is_zero() else b + a)
        else:
            new = set()
            for b in system:
                ba = pairing(form, b, a)
                new.add(b if ba.is_zero() else b - a.scale(2 * ba.ratio(aa)))
        yield frozenset(new)


def enumerate_borels_oracle(cat: AlgebraCatalog) -> BorelSet:
    """Independent closure: reflect each system at each of its own simple roots."""
    _guard(cat)
    start = frozenset(cat.standard_pi)
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for t in _oracle_neighbours(cat, s):
            if not t <= cat.roots:
                raise AssertionError("reflection left the root system")
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return BorelSet([
        FundamentalSystem(tuple(sorted(s, key=RootVector.key))) for s in seen
    ])
