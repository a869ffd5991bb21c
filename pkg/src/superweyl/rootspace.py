"""Exact scalars, root vectors and bilinear forms.

Everything here is built on :class:`fractions.Fraction`.  The only wrinkle is
the one-parameter family D(2,1;alpha), whose form has entries that are
degree-one polynomials in a formal parameter.  :class:`Scalar` carries such a
polynomial as ``const_part + alpha_part * alpha`` and is zero only when both
parts vanish, so predicates like "(a, b) != 0" are evaluated generically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def _q(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Scalar:
    """A value ``const_part + alpha_part * alpha`` with rational parts."""

    const_part: Fraction = Fraction(0)
    alpha_part: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "const_part", _q(self.const_part))
        object.__setattr__(self, "alpha_part", _q(self.alpha_part))

    @classmethod
    def of(cls, x: "Scalar | Rational") -> "Scalar":
        return x if isinstance(x, Scalar) else cls(_q(x), Fraction(0))

    def __add__(self, other: "Scalar | Rational") -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.const_part + o.const_part, self.alpha_part + o.alpha_part)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.const_part, -self.alpha_part)

    def __sub__(self, other: "Scalar | Rational") -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other: "Scalar | Rational") -> "Scalar":
        return Scalar.of(other) - self

    def __mul__(self, other: "Scalar | Rational") -> "Scalar":
        if isinstance(other, Scalar):
            # products stay degree one as long as one side is a constant
            if other.alpha_part == 0:
                other = other.const_part
            elif self.alpha_part == 0:
                return other * self.const_part
            else:
                raise ArithmeticError("product of two alpha-dependent scalars")
        c = _q(other)
        return Scalar(self.const_part * c, self.alpha_part * c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.const_part == 0 and self.alpha_part == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.alpha_part == 0

    def ratio(self, other: "Scalar") -> Fraction:
        """Return the rational ``q`` with ``self == q * other``.

        Raises ``ArithmeticError`` when the two scalars are not proportional,
        which would mean the quotient depends on alpha.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        if other.alpha_part == 0:
            if self.alpha_part != 0:
                raise ArithmeticError("quotient depends on alpha")
            return self.const_part / other.const_part
        q = self.alpha_part / other.alpha_part
        if self.const_part != q * other.const_part:
            raise ArithmeticError("quotient depends on alpha")
        return q

    def evaluate(self, alpha: Rational) -> Fraction:
        return self.const_part + self.alpha_part * _q(alpha)

    def __str__(self) -> str:
        if self.alpha_part == 0:
            return str(self.const_part)
        if self.const_part == 0:
            return f"{self.alpha_part}*a"
        sign = "+" if self.alpha_part > 0 else "-"
        return f"{self.const_part}{sign}{abs(self.alpha_part)}*a"


ZERO = Scalar()


@dataclass(frozen=True)
class RootVector:
    """Coordinates of a weight in a catalog's ordered basis."""

    coords: tuple[Fraction, ...]
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self) -> None:
        coords = tuple(_q(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_hash", hash(coords))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def of(cls, values: Iterable[Rational]) -> "RootVector":
        return cls(tuple(values))

    @classmethod
    def basis(cls, dim: int, i: int, coeff: Rational = 1) -> "RootVector":
        v = [Fraction(0)] * dim
        v[i] = _q(coeff)
        return cls(tuple(v))

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "RootVector") -> "RootVector":
        _check_dims(self, other)
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        _check_dims(self, other)
        return RootVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords))

    def scale(self, c: Rational) -> "RootVector":
        c = _q(c)
        return RootVector(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self.coords) if a]

    def as_pairs(self) -> list[list[int]]:
        """Coordinates as ``[numerator, denominator]`` pairs."""
        return [[a.numerator, a.denominator] for a in self.coords]

    def key(self) -> tuple[Fraction, ...]:
        return self.coords


def _check_dims(u: RootVector, v: RootVector) -> None:
    if len(u.coords) != len(v.coords):
        raise ValueError(f"dimension mismatch: {len(u.coords)} != {len(v.coords)}")


@dataclass(frozen=True)
class GramForm:
    """Symmetric bilinear form given by its Gram matrix of :class:`Scalar`."""

    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Scalar.of(x) for x in row) for row in self.matrix)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def diagonal(cls, entries: Sequence["Scalar | Rational"]) -> "GramForm":
        n = len(entries)
        return cls(tuple(
            tuple(Scalar.of(entries[i]) if i == j else ZERO for j in range(n))
            for i in range(n)
        ))

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @property
    def is_generic(self) -> bool:
        return any(x.alpha_part for row in self.matrix for x in row)

    def nonzero(self) -> tuple[tuple[tuple[int, Scalar], ...], ...]:
        """Per row, the ``(column, entry)`` pairs with a nonzero entry."""
        nz = self.__dict__.get("_nonzero")
        if nz is None:
            nz = tuple(
                tuple((j, x) for j, x in enumerate(row) if not x.is_zero())
                for row in self.matrix
            )
            object.__setattr__(self, "_nonzero", nz)
        return nz

    def at(self, alpha: Rational) -> "GramForm":
        """Specialize the formal parameter to a rational value."""
        return GramForm(tuple(
            tuple(Scalar(x.evaluate(alpha)) for x in row) for row in self.matrix
        ))


def pairing(form: GramForm, u: RootVector, v: RootVector) -> Scalar:
    """Exact value of ``(u, v)`` under ``form``."""
    n = form.dimension
    if len(u.coords) != n or len(v.coords) != n:
        raise ValueError(
            f"dimension mismatch: form has {n}, vectors have "
            f"{len(u.coords)} and {len(v.coords)}"
        )
    cache = form.__dict__.setdefault("_cache", {})
    key = (u, v)
    hit = cache.get(key)
    if hit is not None:
        return hit
    c = Fraction(0)
    a = Fraction(0)
    vc = v.coords
    for i, row in enumerate(form.nonzero()):
        ui = u.coords[i]
        if not ui:
            continue
        for j, x in row:
            vj = vc[j]
            if not vj:
                continue
            w = ui * vj
            if x.const_part:
                c += w * x.const_part
            if x.alpha_part:
                a += w * x.alpha_part
    out = Scalar(c, a)
    if len(cache) < 1_000_000:
        cache[key] = out
    return out


def is_isotropic(form: GramForm, r: RootVector) -> bool:
    return pairing(form, r, r).is_zero()


def rank(vectors: Sequence[RootVector]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    rows = [list(v.coords) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def solve_coefficients(basis: Sequence[RootVector], v: RootVector) -> list[Fraction] | None:
    """Coefficients expressing ``v`` in the span of independent ``basis``, or None."""
    k = len(basis)
    n = len(v.coords)
    # augmented system: columns are basis vectors
    rows = [[basis[j].coords[i] for j in range(k)] + [v.coords[i]] for i in range(n)]
    piv_cols: list[int] = []
    r = 0
    for col in range(k):
        pivot = next((i for i in range(r, n) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    if any(rows[i][k] for i in range(r, n)):
        return None
    out = [Fraction(0)] * k
    for i, col in enumerate(piv_cols):
        out[col] = rows[i][k]
    return out
