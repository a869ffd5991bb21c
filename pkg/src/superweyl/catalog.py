"""Root data of the supported basic classical Lie superalgebras.

Bases are ordered ``(delta_1..delta_m, eps_1..eps_n)`` for gl and spo,
``(eps_1, eps_2, eps_3, delta)`` for F(4) and ``(delta, eps_1, eps_2)`` for
D(2,1;alpha) and G(3).  In G(3) the third ``eps`` is eliminated through
``eps_3 = -eps_1 - eps_2``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .rootspace import (
    GramForm,
    RootVector,
    Scalar,
    is_isotropic,
    rank,
    solve_coefficients,
)


class Family(enum.Enum):
    GL = "GL"
    SPO_D = "SPO_D"
    SPO_C = "SPO_C"
    SPO_B = "SPO_B"
    D21A = "D21A"
    F4 = "F4"
    G3 = "G3"

    @property
    def is_spo(self) -> bool:
        return self in (Family.SPO_D, Family.SPO_C, Family.SPO_B)

    @property
    def is_exceptional(self) -> bool:
        return self in (Family.D21A, Family.F4, Family.G3)


class SpecError(ValueError):
    """Raised for algebra descriptions the engine does not accept."""


NO_ISOTROPIC_MSG = (
    "spo(2m|1) has no isotropic roots, so its super Weyl group coincides "
    "with the ordinary Weyl group; nothing to enumerate"
)


@dataclass(frozen=True)
class AlgebraSpec:
    """Family plus ranks.

    ``m`` and ``n`` are 0 for the exceptional families, whose ranks are fixed.
    ``alpha`` is only meaningful for D(2,1;alpha); ``None`` means generic.
    """

    family: Family
    m: int = 0
    n: int = 0
    alpha: Optional[Fraction] = None

    def __post_init__(self) -> None:
        f, m, n = self.family, self.m, self.n
        if f is Family.GL:
            if m < 1 or n < 1:
                raise SpecError(f"gl(m|n) needs m, n >= 1, got m={m}, n={n}")
        elif f.is_spo:
            if m < 1:
                raise SpecError(f"spo needs m >= 1, got m={m}")
            if f is Family.SPO_B and n == 0:
                raise SpecError(NO_ISOTROPIC_MSG)
            if f is Family.SPO_D and n < 2:
                raise SpecError(f"type D part needs n >= 2, got n={n}")
            if f is Family.SPO_C and n != 1:
                raise SpecError(f"type C case needs n = 1, got n={n}")
            if f is Family.SPO_B and n < 1:
                raise SpecError(f"type B part needs n >= 1, got n={n}")
        if self.alpha is not None:
            if f is not Family.D21A:
                raise SpecError("alpha only applies to D(2,1;alpha)")
            a = Fraction(self.alpha)
            if a in (0, -1):
                raise SpecError(f"alpha must avoid 0 and -1, got {a}")
            object.__setattr__(self, "alpha", a)

    def __str__(self) -> str:
        f = self.family
        if f is Family.GL:
            return f"gl({self.m}|{self.n})"
        if f is Family.SPO_B:
            return f"spo({2 * self.m}|{2 * self.n + 1})"
        if f.is_spo:
            return f"spo({2 * self.m}|{2 * self.n})"
        if f is Family.D21A:
            return "D(2,1)" if self.alpha is None else f"D(2,1;{self.alpha})"
        return "F(4)" if f is Family.F4 else "G(3)"


_GL_RE = re.compile(r"gl\((\d+)\|(\d+)\)")
_SPO_RE = re.compile(r"spo\((\d+)\|(\d+)\)")
_D21_RE = re.compile(r"D\(2,1(?:;(-?\d+)(?:/(\d+))?)?\)")


def parse_spec(text: str) -> AlgebraSpec:
    """Parse ``gl(M|N)``, ``spo(A|B)``, ``D(2,1)``, ``D(2,1;P/Q)``, ``F(4)``, ``G(3)``."""
    s = "".join(text.split())
    if mt := _GL_RE.fullmatch(s):
        return AlgebraSpec(Family.GL, int(mt[1]), int(mt[2]))
    if mt := _SPO_RE.fullmatch(s):
        a, b = int(mt[1]), int(mt[2])
        if a % 2:
            raise SpecError(f"first argument of spo must be even, got {a}")
        m = a // 2
        if b % 2:
            n = (b - 1) // 2
            if n == 0:
                raise SpecError(NO_ISOTROPIC_MSG)
            return AlgebraSpec(Family.SPO_B, m, n)
        n = b // 2
        if n == 0:
            raise SpecError("spo(2m|0) is an ordinary Lie algebra")
        return AlgebraSpec(Family.SPO_C if n == 1 else Family.SPO_D, m, n)
    if mt := _D21_RE.fullmatch(s):
        if mt[1] is None:
            return AlgebraSpec(Family.D21A)
        q = int(mt[2]) if mt[2] is not None else 1
        if q == 0:
            raise SpecError("alpha has a zero denominator")
        return AlgebraSpec(Family.D21A, alpha=Fraction(int(mt[1]), q))
    if s == "F(4)":
        return AlgebraSpec(Family.F4)
    if s == "G(3)":
        return AlgebraSpec(Family.G3)
    raise SpecError(f"cannot parse algebra {text!r}")


@dataclass(frozen=True)
class AlgebraCatalog:
    spec: AlgebraSpec
    dimension: int
    form: GramForm
    basis_names: tuple[str, ...]
    roots: frozenset[RootVector]
    odd_roots: frozenset[RootVector]
    standard_pi: tuple[RootVector, ...]
    extended_pi: tuple[RootVector, ...]
    _sorted_roots: tuple[RootVector, ...] = field(repr=False, default=())

    @property
    def family(self) -> Family:
        return self.spec.family

    @property
    def rank(self) -> int:
        return len(self.standard_pi)

    def even_roots(self) -> frozenset[RootVector]:
        return self.roots - self.odd_roots

    def is_odd(self, r: RootVector) -> bool:
        return r in self.odd_roots

    def isotropic(self, r: RootVector) -> bool:
        return is_isotropic(self.form, r)

    def sorted_roots(self) -> tuple[RootVector, ...]:
        return self._sorted_roots

    def label(self, r: RootVector) -> str:
        return format_root(self, r)


def _vec(dim: int, terms: dict[int, Fraction | int]) -> RootVector:
    v = [Fraction(0)] * dim
    for i, c in terms.items():
        v[i] += Fraction(c)
    return RootVector(tuple(v))


def _gl_spo_names(m: int, n: int) -> tuple[str, ...]:
    return tuple(f"d{i + 1}" for i in range(m)) + tuple(f"e{j + 1}" for j in range(n))


def _build_gl(spec: AlgebraSpec):
    m, n = spec.m, spec.n
    dim = m + n
    form = GramForm.diagonal([1] * m + [-1] * n)
    roots, odd = set(), set()
    for a in range(dim):
        for b in range(dim):
            if a != b:
                r = _vec(dim, {a: 1, b: -1})
                roots.add(r)
                if (a < m) != (b < m):
                    odd.add(r)
    pi = tuple(_vec(dim, {i: 1, i + 1: -1}) for i in range(dim - 1))
    return dim, form, _gl_spo_names(m, n), roots, odd, pi, pi


def _build_spo(spec: AlgebraSpec):
    m, n, f = spec.m, spec.n, spec.family
    dim = m + n
    form = GramForm.diagonal([1] * m + [-1] * n)
    d = list(range(m))
    e = list(range(m, m + n))
    roots, odd = set(), set()
    for block in (d, e):
        for i, j in combinations(block, 2):
            for s, t in product((1, -1), repeat=2):
                roots.add(_vec(dim, {i: s, j: t}))
    for p in d:
        for s in (1, -1):
            roots.add(_vec(dim, {p: 2 * s}))
    for p in d:
        for q in e:
            for s, t in product((1, -1), repeat=2):
                r = _vec(dim, {p: s, q: t})
                roots.add(r)
                odd.add(r)
    if f is Family.SPO_B:
        for q in e:
            for s in (1, -1):
                roots.add(_vec(dim, {q: s}))
        for p in d:
            for s in (1, -1):
                r = _vec(dim, {p: s})
                roots.add(r)
                odd.add(r)

    chain = [_vec(dim, {i: 1, i + 1: -1}) for i in range(dim - 1)]
    alpha0 = _vec(dim, {0: -2})
    if f is Family.SPO_D:
        pi = tuple(chain) + (_vec(dim, {dim - 2: 1, dim - 1: 1}),)
        ext = (alpha0,) + pi
    elif f is Family.SPO_B:
        pi = tuple(chain) + (_vec(dim, {dim - 1: 1}),)
        ext = (alpha0,) + pi
    else:
        # eps_1 - delta_1, delta_1 - delta_2, ..., 2 delta_m
        head = _vec(dim, {m: 1, 0: -1})
        pi = (head,) + tuple(chain[: m - 1]) + (_vec(dim, {m - 1: 2}),)
        ext = pi
    return dim, form, _gl_spo_names(m, n), roots, odd, pi, ext


def _build_d21a(spec: AlgebraSpec):
    dim = 3
    if spec.alpha is None:
        diag = [Scalar(-1, -1), Scalar(1), Scalar(0, 1)]
    else:
        a = spec.alpha
        diag = [Scalar(-1 - a), Scalar(1), Scalar(a)]
    form = GramForm.diagonal(diag)
    roots, odd = set(), set()
    for i in range(3):
        for s in (1, -1):
            roots.add(_vec(dim, {i: 2 * s}))
    for signs in product((1, -1), repeat=3):
        r = RootVector.of(signs)
        roots.add(r)
        odd.add(r)
    pi = (RootVector.of((1, 1, 1)), _vec(dim, {1: -2}), _vec(dim, {2: -2}))
    ext = (_vec(dim, {0: -2}),) + pi
    return dim, form, ("d", "e1", "e2"), roots, odd, pi, ext


def _build_f4(spec: AlgebraSpec):
    dim = 4
    form = GramForm.diagonal([1, 1, 1, -3])
    roots, odd = set(), set()
    for i, j in combinations(range(3), 2):
        for s, t in product((1, -1), repeat=2):
            roots.add(_vec(dim, {i: s, j: t}))
    for i in range(4):
        for s in (1, -1):
            roots.add(_vec(dim, {i: s}))
    half = Fraction(1, 2)
    for signs in product((1, -1), repeat=4):
        r = RootVector.of(s * half for s in signs)
        roots.add(r)
        odd.add(r)
    pi = (
        RootVector.of((half, half, half, half)),
        _vec(dim, {2: -1}),
        _vec(dim, {2: 1, 0: -1}),
        _vec(dim, {0: 1, 1: -1}),
    )
    ext = (_vec(dim, {3: -1}),) + pi
    return dim, form, ("e1", "e2", "e3", "d"), roots, odd, pi, ext


def _g3_eps(dim: int) -> list[RootVector]:
    # eps_1, eps_2, eps_3 = -eps_1 - eps_2
    return [_vec(dim, {1: 1}), _vec(dim, {2: 1}), _vec(dim, {1: -1, 2: -1})]


def _build_g3(spec: AlgebraSpec):
    dim = 3
    form = GramForm((
        (Scalar(2), Scalar(0), Scalar(0)),
        (Scalar(0), Scalar(-2), Scalar(1)),
        (Scalar(0), Scalar(1), Scalar(-2)),
    ))
    eps = _g3_eps(dim)
    delta = _vec(dim, {0: 1})
    roots, odd = set(), set()
    for s in (1, -1):
        roots.add(delta.scale(2 * s))
        r = delta.scale(s)
        roots.add(r)
        odd.add(r)
        for x in eps:
            roots.add(x.scale(s))
            for t in (1, -1):
                r = delta.scale(s) + x.scale(t)
                roots.add(r)
                odd.add(r)
    for x, y in combinations(eps, 2):
        roots.add(x - y)
        roots.add(y - x)
    e1, e2, e3 = eps
    pi = (delta - e1, e2 - e3, -e2)
    ext = (delta.scale(-2),) + pi
    return dim, form, ("d", "e1", "e2"), roots, odd, pi, ext


_BUILDERS = {
    Family.GL: _build_gl,
    Family.SPO_D: _build_spo,
    Family.SPO_C: _build_spo,
    Family.SPO_B: _build_spo,
    Family.D21A: _build_d21a,
    Family.F4: _build_f4,
    Family.G3: _build_g3,
}


def build_catalog(spec: AlgebraSpec) -> AlgebraCatalog:
    dim, form, names, roots, odd, pi, ext = _BUILDERS[spec.family](spec)
    cat = AlgebraCatalog(
        spec=spec,
        dimension=dim,
        form=form,
        basis_names=names,
        roots=frozenset(roots),
        odd_roots=frozenset(odd),
        standard_pi=tuple(pi),
        extended_pi=tuple(ext),
        _sorted_roots=tuple(sorted(roots, key=RootVector.key)),
    )
    _validate(cat)
    return cat


def _validate(cat: AlgebraCatalog) -> None:
    for r in cat.roots:
        if -r not in cat.roots:
            raise AssertionError(f"root set not closed under negation at {r}")
        if cat.isotropic(r) and r not in cat.odd_roots:
            raise AssertionError(f"isotropic even root {r}")
    for r in cat.extended_pi:
        if r not in cat.roots:
            raise AssertionError(f"{r} is not a root")
    if rank(cat.standard_pi) != len(cat.standard_pi):
        raise AssertionError("standard fundamental system is dependent")
    for r in cat.roots:
        c = solve_coefficients(cat.standard_pi, r)
        if c is None or any(x.denominator != 1 for x in c):
            raise AssertionError(f"{r} is not an integral combination of the standard system")
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            raise AssertionError(f"{r} has mixed-sign coordinates in the standard system")


def positive_roots(cat: AlgebraCatalog, pi) -> list[RootVector]:
    """Roots that are non-negative combinations of ``pi``."""
    out = []
    for r in cat.sorted_roots():
        c = solve_coefficients(pi, r)
        if c is not None and all(x >= 0 for x in c):
            out.append(r)
    return out


def _fmt_terms(terms: list[tuple[Fraction, str]]) -> str:
    parts = []
    for c, name in terms:
        if not c:
            continue
        mag = abs(c)
        coeff = "" if mag == 1 else str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{coeff}{name}"))
    if not parts:
        return "0"
    s = "".join(sign + body for sign, body in parts)
    return s[1:] if s.startswith("+") else s


def format_root(cat: AlgebraCatalog, v: RootVector) -> str:
    """Compact name such as ``d1-d2``, ``-2d1``, ``e1+e2`` or ``(e1+e2+e3+d)/2``."""
    names = cat.basis_names
    coords = list(v.coords)
    if cat.family is Family.G3:
        # re-express with eps_3 where that shortens the name
        c1, c2 = coords[1], coords[2]
        best = None
        for t in (Fraction(0), -c1, -c2):
            cand = [(coords[0], "d"), (c1 + t, "e1"), (c2 + t, "e2"), (t, "e3")]
            cost = (sum(1 for c, _ in cand if c), sum(abs(c) for c, _ in cand))
            if best is None or cost < best[0]:
                best = (cost, cand)
        return _fmt_terms(best[1])
    if any(c.denominator == 2 for c in coords):
        return "(" + _fmt_terms([(2 * c, nm) for c, nm in zip(coords, names)]) + ")/2"
    return _fmt_terms(list(zip(coords, names)))
