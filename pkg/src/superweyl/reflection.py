"""Even and odd reflections acting on ordered fundamental systems."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .catalog import AlgebraCatalog, Family, format_root
from .rootspace import GramForm, RootVector, is_isotropic, pairing, rank

CanonicalKey = tuple[tuple[Fraction, ...], ...]


def canonical_key(roots: Sequence[RootVector]) -> CanonicalKey:
    return tuple(sorted(r.coords for r in roots))


@dataclass(frozen=True)
class FundamentalSystem:
    """An ordered simple system.  Identity as a Borel is ``canonical_key``."""

    ordered_roots: tuple[RootVector, ...]
    canonical_key: CanonicalKey = field(init=False, compare=False)

    def __post_init__(self) -> None:
        roots = tuple(self.ordered_roots)
        object.__setattr__(self, "ordered_roots", roots)
        if rank(roots) != len(roots):
            raise ValueError("roots of a fundamental system must be independent")
        object.__setattr__(self, "canonical_key", canonical_key(roots))

    @classmethod
    def trusted(cls, roots: Sequence[RootVector]) -> "FundamentalSystem":
        """Skip the independence check; for images of a system under a reflection."""
        fs = object.__new__(cls)
        object.__setattr__(fs, "ordered_roots", tuple(roots))
        object.__setattr__(fs, "canonical_key", canonical_key(fs.ordered_roots))
        return fs

    def __len__(self) -> int:
        return len(self.ordered_roots)

    def __iter__(self):
        return iter(self.ordered_roots)

    def same_borel(self, other: "FundamentalSystem") -> bool:
        return self.canonical_key == other.canonical_key

    def index_of(self, r: RootVector) -> int:
        try:
            return self.ordered_roots.index(r)
        except ValueError:
            return -1


class Kind(enum.Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class SuperReflection:
    root: RootVector
    kind: Kind
    label: str = ""

    @property
    def is_odd(self) -> bool:
        return self.kind is Kind.ODD


def generators(cat: AlgebraCatalog) -> list[SuperReflection]:
    """One generator per member of the extended system, in its order."""
    out = []
    for r in cat.extended_pi:
        kind = Kind.ODD if is_isotropic(cat.form, r) else Kind.EVEN
        out.append(SuperReflection(r, kind, f"r[{format_root(cat, r)}]"))
    return out


def standard_system(cat: AlgebraCatalog) -> FundamentalSystem:
    return FundamentalSystem(cat.standard_pi)


def even_reflect_vector(form: GramForm, axis: RootVector, v: RootVector) -> RootVector:
    """``v - 2 (v, axis) / (axis, axis) * axis``."""
    aa = pairing(form, axis, axis)
    if aa.is_zero():
        raise ValueError("cannot reflect along an isotropic vector")
    va = pairing(form, v, axis)
    if va.is_zero():
        return v
    return v - axis.scale(2 * va.ratio(aa))


def odd_reflect_ordered(
    form: GramForm, roots: Sequence[RootVector], k: int
) -> list[RootVector]:
    """Odd reflection at the isotropic root in position ``k``, keeping positions."""
    theta = roots[k]
    out = []
    for i, r in enumerate(roots):
        if i == k:
            out.append(-theta)
        elif pairing(form, r, theta).is_zero():
            out.append(r)
        else:
            out.append(r + theta)
    return out


def _is_long_delta_root(cat: AlgebraCatalog, r: RootVector) -> bool:
    # +-2 delta_p in the gl/spo basis (delta indices come first)
    supp = r.support()
    return len(supp) == 1 and supp[0] < cat.spec.m and abs(r.coords[supp[0]]) == 2


def apply_generator(
    cat: AlgebraCatalog,
    gen: SuperReflection,
    fs: FundamentalSystem,
) -> FundamentalSystem:
    roots = fs.ordered_roots
    if not gen.is_odd:
        return FundamentalSystem.trusted(
            [even_reflect_vector(cat.form, gen.root, r) for r in roots]
        )
    k = fs.index_of(gen.root)
    if k < 0:
        k = fs.index_of(-gen.root)
    if k < 0:
        return fs
    out = odd_reflect_ordered(cat.form, roots, k)
    n = len(out)
    if (
        cat.family in (Family.SPO_D, Family.SPO_C)
        and n >= 2
        and k == n - 1
        and _is_long_delta_root(cat, out[n - 2])
    ):
        # the long root produced next to the tail goes last
        out[n - 2], out[n - 1] = out[n - 1], out[n - 2]
    return FundamentalSystem.trusted(out)
