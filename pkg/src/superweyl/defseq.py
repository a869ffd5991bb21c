"""Defining sequences: signed index words encoding ordered fundamental systems.

An index is a basis position: ``0..m-1`` stand for ``1bar..mbar`` (the delta
directions) and ``m..m+n-1`` for ``1..n``.  An entry is a pair ``(sign, index)``.

For spo the ordered system is read as a chain

    s1 e[i1] - s2 e[i2],  s2 e[i2] - s3 e[i3],  ...,  sN e[iN] + tail

where ``tail`` is a signed basis vector (types D and C) or zero (type B), and
the sequence is ``(s1 i1, ..., sN iN)``.  For gl the chain is unsigned and has
one root fewer than entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .catalog import AlgebraCatalog, Family
from .enumerator import BorelSet, enumerate_borels
from .reflection import FundamentalSystem, SuperReflection
from .rootspace import RootVector

Entry = tuple[int, int]


class ShapeError(ValueError):
    """An ordered system does not have the chain shape a sequence needs."""


class DecodeError(ValueError):
    pass


@dataclass(frozen=True)
class DefiningSequence:
    family: Family
    entries: tuple[Entry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def format(self, m: int) -> list[str]:
        return [format_entry(e, m, signed=self.family is not Family.GL) for e in self.entries]


def format_entry(e: Entry, m: int, signed: bool = True) -> str:
    s, i = e
    body = f"b{i + 1}" if i < m else str(i - m + 1)
    return "-" + body if signed and s < 0 else body


def parse_entry(text: str, m: int, n: int) -> Entry:
    t = text.strip()
    sign = 1
    if t.startswith("-"):
        sign, t = -1, t[1:]
    if t.startswith("b"):
        k = int(t[1:])
        if not 1 <= k <= m:
            raise ValueError(f"index {text!r} out of range")
        return sign, k - 1
    k = int(t)
    if not 1 <= k <= n:
        raise ValueError(f"index {text!r} out of range")
    return sign, m + k - 1


def parse_sequence(cat: AlgebraCatalog, items: Sequence[str]) -> DefiningSequence:
    return DefiningSequence(
        cat.family, tuple(parse_entry(x, cat.spec.m, cat.spec.n) for x in items)
    )


def _require_codec(cat: AlgebraCatalog) -> None:
    if cat.family.is_exceptional:
        raise ValueError(f"no defining-sequence codec for {cat.spec}")


def _single_term(v: RootVector) -> Optional[Entry]:
    supp = v.support()
    if len(supp) != 1:
        return None
    c = v.coords[supp[0]]
    if abs(c) != 1:
        return None
    return (1 if c > 0 else -1), supp[0]


def _unit(dim: int, e: Entry) -> RootVector:
    return RootVector.basis(dim, e[1], e[0])


def _first_terms(r: RootVector) -> list[Entry]:
    out = []
    for i in r.support():
        c = r.coords[i]
        if abs(c) in (1, 2):
            out.append(((1 if c > 0 else -1), i))
    return out


def _chain_spo(cat: AlgebraCatalog, roots: Sequence[RootVector]) -> list[tuple[Entry, ...]]:
    """All chain readings of ``roots``; each reading is the tuple of initial terms."""
    dim = cat.dimension
    tail_zero = cat.family is Family.SPO_B
    found = []
    for init in _first_terms(roots[0]):
        entries = [init]
        ok = True
        for l in range(len(roots) - 1):
            rear = _single_term(roots[l] - _unit(dim, entries[-1]))
            if rear is None:
                ok = False
                break
            entries.append((-rear[0], rear[1]))
        if not ok:
            continue
        tail = roots[-1] - _unit(dim, entries[-1])
        if tail_zero:
            if not tail.is_zero():
                continue
        elif _single_term(tail) is None:
            continue
        if sorted(i for _, i in entries) != list(range(dim)):
            continue
        found.append(tuple(entries))
    return found


def _chain_gl(cat: AlgebraCatalog, roots: Sequence[RootVector]) -> Optional[tuple[Entry, ...]]:
    dim = cat.dimension
    idx = []
    for l, r in enumerate(roots):
        supp = r.support()
        if len(supp) != 2:
            return None
        a = next((i for i in supp if r.coords[i] == 1), None)
        b = next((i for i in supp if r.coords[i] == -1), None)
        if a is None or b is None:
            return None
        if l == 0:
            idx.append(a)
        elif idx[-1] != a:
            return None
        idx.append(b)
    if sorted(idx) != list(range(dim)):
        return None
    return tuple((1, i) for i in idx)


def encode(cat: AlgebraCatalog, fs: FundamentalSystem) -> DefiningSequence:
    _require_codec(cat)
    roots = fs.ordered_roots
    if cat.family is Family.GL:
        entries = _chain_gl(cat, roots)
        if entries is None:
            raise ShapeError(f"not a telescoping chain: {roots}")
        return DefiningSequence(cat.family, entries)
    readings = _chain_spo(cat, roots)
    if len(set(readings)) != 1:
        raise ShapeError(f"{len(set(readings))} chain readings for {roots}")
    return DefiningSequence(cat.family, readings[0])


def has_chain_shape(cat: AlgebraCatalog, fs: FundamentalSystem) -> bool:
    try:
        encode(cat, fs)
    except ShapeError:
        return False
    return True


_BORELS: dict = {}


def _borels_for(cat: AlgebraCatalog) -> BorelSet:
    b = _BORELS.get(cat.spec)
    if b is None:
        b = _BORELS[cat.spec] = enumerate_borels(cat)
    return b


def decode(
    cat: AlgebraCatalog, seq: DefiningSequence, borels: Optional[BorelSet] = None
) -> FundamentalSystem:
    """The ordered system with sequence ``seq``.

    For types D and C the tail of the last root is not recorded in the
    sequence; it is the unique choice that yields an enumerated system.
    """
    _require_codec(cat)
    if borels is None:
        borels = _borels_for(cat)
    dim = cat.dimension
    ent = seq.entries
    if len(ent) != dim or sorted(i for _, i in ent) != list(range(dim)):
        raise DecodeError(f"not a signed permutation of the index set: {ent}")
    if cat.family is Family.GL:
        roots = tuple(_unit(dim, ent[l]) - _unit(dim, ent[l + 1]) for l in range(dim - 1))
        cands = [roots]
    else:
        head = tuple(_unit(dim, ent[l]) - _unit(dim, ent[l + 1]) for l in range(dim - 1))
        last = _unit(dim, ent[-1])
        if cat.family is Family.SPO_B:
            tails = [RootVector.basis(dim, 0, 0)]
        else:
            tails = [RootVector.basis(dim, i, s) for i in range(dim) for s in (1, -1)]
        cands = [head + (last + t,) for t in tails]
    hits = []
    for roots in cands:
        if not all(r in cat.roots for r in roots):
            continue
        try:
            fs = FundamentalSystem(roots)
        except ValueError:
            continue
        if fs.canonical_key not in borels.index:
            continue
        if encode_or_none(cat, fs) == seq:
            hits.append(fs)
    if not hits:
        raise DecodeError(f"no enumerated system has sequence {seq.format(cat.spec.m)}")
    if len(hits) > 1:
        raise DecodeError(f"sequence {seq.format(cat.spec.m)} is ambiguous")
    return hits[0]


def encode_or_none(cat: AlgebraCatalog, fs: FundamentalSystem) -> Optional[DefiningSequence]:
    try:
        return encode(cat, fs)
    except ShapeError:
        return None


def standard_sequence(cat: AlgebraCatalog) -> DefiningSequence:
    _require_codec(cat)
    m, dim = cat.spec.m, cat.dimension
    if cat.family is Family.SPO_C:
        # (1, 1bar, 2bar, ..., mbar)
        entries = ((1, m),) + tuple((1, i) for i in range(m))
    else:
        entries = tuple((1, i) for i in range(dim))
    return DefiningSequence(cat.family, entries)


def _signed_map(cat: AlgebraCatalog, root: RootVector) -> dict[int, Entry]:
    """Signed permutation of indices induced by an even generator, read off its shape."""
    supp = root.support()
    c = [root.coords[i] for i in supp]
    if len(supp) == 1:
        # +-2 delta_p, +-delta_p or +-eps_q: flip that index
        return {supp[0]: (-1, supp[0])}
    a, b = supp
    if c[0] * c[1] < 0:
        # e_a - e_b: swap a and b
        return {a: (1, b), b: (1, a)}
    # e_a + e_b: a -> -b, b -> -a
    return {a: (-1, b), b: (-1, a)}


def _odd_pair(cat: AlgebraCatalog) -> tuple[int, int]:
    """(delta index, eps index) of the isotropic generator."""
    m = cat.spec.m
    if cat.family is Family.SPO_C:
        return 0, m
    return m - 1, m


def sequence_action(
    cat: AlgebraCatalog, gen: SuperReflection, seq: DefiningSequence
) -> DefiningSequence:
    """Rewrite ``seq`` as the generator acts, using only the sequence itself."""
    _require_codec(cat)
    ent = list(seq.entries)
    if not gen.is_odd:
        if cat.family is Family.GL:
            a, b = gen.root.support()
            swap = {a: b, b: a}
            return DefiningSequence(seq.family, tuple((1, swap.get(i, i)) for _, i in ent))
        mp = _signed_map(cat, gen.root)
        out = []
        for s, i in ent:
            if i in mp:
                t, j = mp[i]
                out.append((s * t, j))
            else:
                out.append((s, i))
        return DefiningSequence(seq.family, tuple(out))

    p, q = _odd_pair(cat)
    pos = {i: k for k, (_, i) in enumerate(ent)}
    kp, kq = pos[p], pos[q]
    if abs(kp - kq) != 1:
        return seq
    if cat.family is Family.GL:
        ent[kp], ent[kq] = ent[kq], ent[kp]
        return DefiningSequence(seq.family, tuple(ent))
    sp, sq = ent[kp][0], ent[kq][0]
    last = len(ent) - 1
    if (
        cat.family in (Family.SPO_D, Family.SPO_C)
        and kq == last
        and kp == last - 1
        and sp == -sq
    ):
        # (.., x p, -x q) at the end -> (.., x q, x p)
        ent[kp], ent[kq] = (sp, q), (sp, p)
        return DefiningSequence(seq.family, tuple(ent))
    if sp != sq:
        return seq
    ent[kp], ent[kq] = ent[kq], ent[kp]
    return DefiningSequence(seq.family, tuple(ent))


@dataclass(frozen=True)
class PathDependence:
    """A generator image whose ordering differs from the stored one."""

    borel: int
    label: str
    image: DefiningSequence
    stored: DefiningSequence


def path_dependence(cat: AlgebraCatalog, borels: BorelSet) -> list[PathDependence]:
    """Images ``g . fs`` whose sequence differs from the stored sequence of that Borel.

    Orderings are carried along by the generators, so a Borel reached along
    two routes can come out in two orderings.  This lists where that happens
    on one generator step from the stored representatives.
    """
    from .reflection import apply_generator, generators

    _require_codec(cat)
    out = []
    gens = generators(cat)
    for b, fs in enumerate(borels):
        for g in gens:
            img = apply_generator(cat, g, fs)
            rep = borels[borels.id_of(img)]
            s_img, s_rep = encode(cat, img), encode(cat, rep)
            if s_img != s_rep:
                out.append(PathDependence(b, g.label, s_img, s_rep))
    return out
