"""The super Weyl group as a permutation group on the enumerated Borels.

Composition is function application: ``compose(p, q)(x) == p(q(x))``, so
a word ``x y z`` evaluates to ``x . y . z`` and acts by ``z`` first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Optional, Sequence

from . import kernels as K
from .catalog import AlgebraCatalog
from .enumerator import BorelSet
from .reflection import apply_generator, generators

Permutation = tuple[int, ...]


def as_permutation(images: Iterable[int]) -> Permutation:
    p = tuple(int(x) for x in images)
    if sorted(p) != list(range(len(p))):
        raise ValueError("images do not form a bijection")
    return p


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    if len(p) != len(q):
        raise ValueError("degree mismatch")
    return K.compose(p, q)


def element_order(p: Permutation) -> int:
    return K.element_order(p)


def orbit_length(p: Permutation, point: int) -> int:
    """Length of the cycle of ``p`` through ``point``."""
    k, x = 1, p[point]
    while x != point:
        x = p[x]
        k += 1
    return k


def cycle_type(p: Permutation) -> list[int]:
    """Nontrivial cycle lengths, descending."""
    return sorted((c for c in K.cycle_lengths(p) if c > 1), reverse=True)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class GeneratorTable:
    labels: tuple[str, ...]
    perms: tuple[Permutation, ...]
    odd: tuple[bool, ...]

    def __post_init__(self) -> None:
        for lab, p in zip(self.labels, self.perms):
            if not K.is_identity(K.compose(p, p)):
                raise ValueError(f"generator {lab} is not an involution")

    @property
    def degree(self) -> int:
        return len(self.perms[0]) if self.perms else 0

    def __len__(self) -> int:
        return len(self.labels)

    def perm(self, label: str) -> Permutation:
        try:
            return self.perms[self.labels.index(label)]
        except ValueError:
            raise KeyError(f"unknown generator label {label!r}") from None

    def even_part(self) -> "GeneratorTable":
        keep = [i for i, o in enumerate(self.odd) if not o]
        return GeneratorTable(
            tuple(self.labels[i] for i in keep),
            tuple(self.perms[i] for i in keep),
            tuple(False for _ in keep),
        )


def build_generator_table(cat: AlgebraCatalog, borels: BorelSet) -> GeneratorTable:
    gens = generators(cat)
    perms = []
    for g in gens:
        images = []
        for fs in borels:
            img = apply_generator(cat, g, fs)
            j = borels.index.get(img.canonical_key)
            if j is None:
                raise RuntimeError(f"{g.label} leaves the enumerated set; closure incomplete")
            images.append(j)
        perms.append(as_permutation(images))
    return GeneratorTable(
        tuple(g.label for g in gens), tuple(perms), tuple(g.is_odd for g in gens)
    )


# -- Schreier-Sims ---------------------------------------------------------


@dataclass(frozen=True)
class GroupOrderResult:
    order: int
    base: tuple[int, ...]
    strong_generator_count: int


def _first_moved(p: Permutation) -> int:
    for i, x in enumerate(p):
        if i != x:
            return i
    return -1


class _Chain:
    """Base, per-level strong generators and transversals.

    Transversals only ever grow and existing representatives are never
    replaced, so a Schreier generator that once sifted to the identity
    keeps doing so.  That lets each level remember what it has tested.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.base: list[int] = []
        self.gens: list[list[Permutation]] = []
        self.trans: list[dict[int, Permutation]] = []
        self.inv: list[dict[int, Permutation]] = []
        self.orbit: list[list[int]] = []
        self.done: list[set[tuple[int, int]]] = []

    def add_level(self, point: int) -> None:
        ident = identity(self.degree)
        self.base.append(point)
        self.gens.append([])
        self.trans.append({point: ident})
        self.inv.append({point: ident})
        self.orbit.append([point])
        self.done.append(set())

    def add_generator(self, i: int, g: Permutation) -> None:
        gens = self.gens[i]
        gens.append(g)
        trans, inv, orbit = self.trans[i], self.inv[i], self.orbit[i]
        # images of the old orbit under the new generator, then close up
        frontier = []
        for x in list(orbit):
            y = g[x]
            if y not in trans:
                u = K.compose(g, trans[x])
                trans[y] = u
                inv[y] = K.invert(u)
                orbit.append(y)
                frontier.append(y)
        while frontier:
            nxt = []
            for x in frontier:
                ux = trans[x]
                for h in gens:
                    y = h[x]
                    if y not in trans:
                        u = K.compose(h, ux)
                        trans[y] = u
                        inv[y] = K.invert(u)
                        orbit.append(y)
                        nxt.append(y)
            frontier = nxt

    def strip(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        return K.sift(g, self.base, self.inv, start)

    def _install(self, h: Permutation, lo: int, hi: int) -> None:
        if hi == len(self.base):
            self.add_level(_first_moved(h))
        for lvl in range(lo, hi + 1):
            self.add_generator(lvl, h)


def schreier_sims(perms: Sequence[Permutation]) -> _Chain:
    """Deterministic Schreier-Sims; base points are first moved points."""
    chain = _Chain(len(perms[0]))
    for g in perms:
        if K.is_identity(g):
            continue
        h, j = chain.strip(g, 0)
        if not K.is_identity(h):
            chain._install(h, 0, j)

    i = len(chain.base) - 1
    while i >= 0:
        found = False
        orbit, gens, trans, inv, done = (
            chain.orbit[i], chain.gens[i], chain.trans[i], chain.inv[i], chain.done[i]
        )
        for beta in orbit:
            u_beta = trans[beta]
            for k, x in enumerate(gens):
                if (beta, k) in done:
                    continue
                done.add((beta, k))
                s = K.compose(inv[x[beta]], K.compose(x, u_beta))
                h, j = chain.strip(s, i + 1)
                if K.is_identity(h):
                    continue
                chain._install(h, i + 1, j)
                i = j
                found = True
                break
            if found:
                break
        if not found:
            i -= 1
    return chain


def group_order(table: GeneratorTable | Sequence[Permutation]) -> GroupOrderResult:
    perms = table.perms if isinstance(table, GeneratorTable) else tuple(table)
    if not perms:
        raise ValueError("need at least one generator")
    chain = schreier_sims(perms)
    order = prod(len(o) for o in chain.orbit) if chain.orbit else 1
    strong = {p for level in chain.gens for p in level}
    return GroupOrderResult(order, tuple(chain.base), len(strong))


def contains(chain: _Chain, p: Permutation) -> bool:
    h, j = chain.strip(p, 0)
    return j == len(chain.base) and K.is_identity(h)


def brute_force_order(
    table: GeneratorTable | Sequence[Permutation], limit: int = 5_000_000
) -> Optional[int]:
    """Order by listing every element; None if it exceeds ``limit``."""
    perms = table.perms if isinstance(table, GeneratorTable) else tuple(table)
    n = K.closure_size(list(perms), limit)
    return None if n < 0 else n


def stabilizer_closure_order(
    table: GeneratorTable | Sequence[Permutation], point: int = 0, limit: int = 20_000_000
) -> Optional[int]:
    """``|orbit(point)| * |stabilizer|`` with the stabilizer listed element by element.

    The stabilizer is generated by all Schreier generators of the orbit
    (Schreier's lemma) and closed by brute force, so no sifting is involved.
    For groups a little too large to list whole.  None past ``limit``.
    """
    perms = list(table.perms if isinstance(table, GeneratorTable) else table)
    n = len(perms[0])
    if n > 256:
        raise ValueError("closure is only supported on at most 256 points")
    trans = K.orbit_transversal(perms, point)
    cand = set()
    for x, u in trans.items():
        for s in perms:
            cand.add(bytes(K.compose(K.invert(trans[s[x]]), K.compose(s, u))))
    seen = {bytes(range(n))}
    tables: list[bytes] = []
    for h in sorted(cand):
        if h in seen:
            continue
        t = h + bytes(256 - n)
        tables.append(t)
        # seen is closed under the old generators; multiply it by the new one
        # and close the new elements under everything
        frontier = [y for y in {x.translate(t) for x in seen} if y not in seen]
        seen.update(frontier)
        while frontier:
            nxt = []
            for x in frontier:
                for t in tables:
                    y = x.translate(t)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            if len(seen) > limit:
                return None
            frontier = nxt
    return len(trans) * len(seen)


# -- words and relations ---------------------------------------------------

_TOKEN = re.compile(r"\s*(r\[[^\]]*\]|[A-Za-z_][A-Za-z0-9_']*|\(|\)|\^\s*-?\d+|=\s*1|\S)")


class RelationSyntaxError(ValueError):
    pass


def _tokens(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            break
        tok = mt.group(1)
        pos = mt.end()
        out.append("".join(tok.split()))
    return out


def parse_word(text: str, aliases: Optional[dict[str, str]] = None) -> list[str]:
    """Expand a word with nested groups and powers into a flat label list.

    ``"(c a)^3 b"`` becomes ``[c, a, c, a, c, a, b]``.  Names found in
    ``aliases`` are replaced by their generator labels.
    """
    aliases = aliases or {}
    toks = _tokens(text)
    if toks and toks[-1] == "=1":
        toks = toks[:-1]
    pos = 0

    def seq() -> list[str]:
        out: list[str] = []
        while pos < len(toks) and toks[pos] != ")":
            out.extend(atom())
        return out

    def atom() -> list[str]:
        nonlocal pos
        tok = toks[pos]
        if tok == "(":
            pos += 1
            body = seq()
            if pos >= len(toks) or toks[pos] != ")":
                raise RelationSyntaxError(f"unbalanced parentheses in {text!r}")
            pos += 1
        elif tok.startswith("^") or tok in (")", "=1"):
            raise RelationSyntaxError(f"unexpected {tok!r} in {text!r}")
        else:
            pos += 1
            body = [aliases.get(tok, tok)]
        if pos < len(toks) and toks[pos].startswith("^"):
            e = int(toks[pos][1:])
            if e < 0:
                raise RelationSyntaxError("negative exponents are not supported")
            pos += 1
            body = body * e
        return body

    word = seq()
    if pos != len(toks):
        raise RelationSyntaxError(f"trailing input in {text!r}")
    return word


def evaluate_word(table: GeneratorTable, word: Sequence[str]) -> Permutation:
    result = identity(table.degree)
    for lab in word:
        result = K.compose(result, table.perm(lab))
    return result


@dataclass(frozen=True)
class Relation:
    word: tuple[str, ...]
    exponent: int
    text: str = ""


def check_relations(
    table: GeneratorTable, relations: Sequence[Relation | tuple[Sequence[str], int]]
) -> list[bool]:
    out = []
    for rel in relations:
        word, e = (rel.word, rel.exponent) if isinstance(rel, Relation) else rel
        p = K.power(evaluate_word(table, word), e)
        out.append(K.is_identity(p))
    return out


_ALIAS = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_']*)\s*:=\s*(\S+)\s*$")
_ALGEBRA = re.compile(r"^\s*algebra\s*:\s*(.+?)\s*$")
_OUTER_POWER = re.compile(r"^\((.*)\)\s*\^\s*(\d+)\s*(=\s*1)?$")


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


@dataclass(frozen=True)
class RelationFile:
    algebra: Optional[str]
    aliases: dict[str, str]
    relations: tuple[Relation, ...]


def parse_relations(text: str) -> RelationFile:
    """Parse a relation file.

    Lines are ``algebra: <spec>``, ``name := label``, or a relation such as
    ``(a b)^2``, ``a^2`` or ``a c (b a)^3 = 1``.  ``#`` starts a comment.
    """
    algebra = None
    aliases: dict[str, str] = {}
    rels: list[Relation] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if mt := _ALGEBRA.match(line):
            algebra = mt[1]
            continue
        if mt := _ALIAS.match(line):
            aliases[mt[1]] = mt[2]
            continue
        mt = _OUTER_POWER.match(line)
        if mt and _balanced(mt[1]):
            rels.append(Relation(tuple(parse_word(mt[1], aliases)), int(mt[2]), line))
        else:
            rels.append(Relation(tuple(parse_word(line, aliases)), 1, line))
    return RelationFile(algebra, aliases, tuple(rels))
