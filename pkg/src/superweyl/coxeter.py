"""Coxeter matrices of the super simple reflections and their graphs."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from fractions import Fraction

from . import kernels as K
from .catalog import AlgebraCatalog, AlgebraSpec, Family, build_catalog
from .permgroup import GeneratorTable
from .reflection import even_reflect_vector, generators
from .rootspace import RootVector


@dataclass(frozen=True)
class CoxeterMatrix:
    labels: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    odd: tuple[bool, ...]

    def __post_init__(self) -> None:
        k = len(self.labels)
        if len(self.entries) != k or any(len(r) != k for r in self.entries):
            raise ValueError("matrix shape does not match labels")
        for i in range(k):
            if self.entries[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(i + 1, k):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("matrix is not symmetric")
                if self.entries[i][j] < 2:
                    raise ValueError("off-diagonal entries must be at least 2")

    def __len__(self) -> int:
        return len(self.labels)

    def m(self, x: str, y: str) -> int:
        return self.entries[self.labels.index(x)][self.labels.index(y)]

    def restrict(self, keep: Sequence[int]) -> "CoxeterMatrix":
        keep = list(keep)
        return CoxeterMatrix(
            tuple(self.labels[i] for i in keep),
            tuple(tuple(self.entries[i][j] for j in keep) for i in keep),
            tuple(self.odd[i] for i in keep),
        )

    def even_part(self) -> "CoxeterMatrix":
        return self.restrict([i for i, o in enumerate(self.odd) if not o])

    def edges(self) -> list[tuple[int, int, int]]:
        k = len(self)
        return [
            (i, j, self.entries[i][j])
            for i in range(k)
            for j in range(i + 1, k)
            if self.entries[i][j] >= 3
        ]

    def to_text(self) -> str:
        width = max([len(lab) for lab in self.labels] + [2])
        head = " " * (width + 2) + " ".join(f"g{i:<3d}" for i in range(len(self)))
        lines = [head.rstrip()]
        for i, lab in enumerate(self.labels):
            mark = "*" if self.odd[i] else " "
            row = " ".join(f"{v:<4d}" for v in self.entries[i])
            lines.append(f"{lab:<{width}}{mark} {row}".rstrip())
        return "\n".join(lines) + "\n"

    def to_json(self, algebra: str = "") -> str:
        doc = {
            "algebra": algebra,
            "labels": list(self.labels),
            "odd": list(self.odd),
            "matrix": [list(r) for r in self.entries],
        }
        return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class CoxeterGraph:
    nodes: tuple[tuple[str, bool], ...]
    edges: tuple[tuple[int, int, int], ...]

    @classmethod
    def of(cls, mat: CoxeterMatrix) -> "CoxeterGraph":
        return cls(tuple(zip(mat.labels, mat.odd)), tuple(mat.edges()))


def _pair_order(args: tuple[tuple[int, ...], tuple[int, ...]]) -> int:
    p, q = args
    return K.element_order(K.compose(p, q))


def coxeter_matrix(table: GeneratorTable, jobs: int = 1) -> CoxeterMatrix:
    """``m[x][y]`` is the order of ``gen_x . gen_y`` acting on the Borels."""
    k = len(table)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    work = [(table.perms[i], table.perms[j]) for i, j in pairs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            orders = list(ex.map(_pair_order, work))
    else:
        orders = [_pair_order(w) for w in work]
    m = [[1] * k for _ in range(k)]
    for (i, j), o in zip(pairs, orders):
        m[i][j] = m[j][i] = o
    return CoxeterMatrix(table.labels, tuple(tuple(r) for r in m), table.odd)


def emit_dot(g: CoxeterGraph | CoxeterMatrix) -> str:
    if isinstance(g, CoxeterMatrix):
        g = CoxeterGraph.of(g)
    lines = ["graph coxeter { node [shape=circle];"]
    for i, (label, odd) in enumerate(g.nodes):
        if odd:
            lines.append(
                f'g{i} [label="{label}", style=filled, fillcolor=black, fontcolor=white];'
            )
        else:
            lines.append(f'g{i} [label="{label}"];')
    for i, j, w in sorted(g.edges):
        if w == 3:
            lines.append(f"g{i} -- g{j};")
        elif w >= 4:
            lines.append(f'g{i} -- g{j} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- asserted graphs -------------------------------------------------------


def _from_edges(spec: AlgebraSpec, edges: dict[tuple[int, int], int]) -> CoxeterMatrix:
    gens = generators(build_catalog(spec))
    k = len(gens)
    m = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
    for (i, j), w in edges.items():
        m[i][j] = m[j][i] = w
    return CoxeterMatrix(
        tuple(g.label for g in gens),
        tuple(tuple(r) for r in m),
        tuple(g.is_odd for g in gens),
    )


def _chain(k: int, odd: int, weight_at_odd: int = 12) -> dict[tuple[int, int], int]:
    return {(i, i + 1): weight_at_odd if odd in (i, i + 1) else 3 for i in range(k - 1)}


def _gl_edges(m: int, n: int) -> Optional[dict]:
    if m + n >= 4:
        return _chain(m + n - 1, m - 1)
    if (m, n) in ((1, 2), (2, 1)):
        return {(0, 1): 6}
    return None


def _spo_d_edges(m: int, n: int) -> dict:
    # -2d1, d1-d2, ..., dm-e1, e1-e2, ..., e(n-1)-en, e(n-1)+en
    odd = m
    edges = _chain(m + n, odd)
    if m >= 2:
        edges[(0, 1)] = 4
    # the fork leg hangs off the neighbour of e(n-1)-en
    edges[(m + n - 2, m + n)] = 12 if m + n - 2 == odd else 3
    return edges


def _spo_c_edges(m: int) -> dict:
    # -d1+e1, d1-d2, ..., d(m-1)-dm, 2dm
    if m == 1:
        return {(0, 1): 6}
    edges = _chain(m + 1, 0)
    edges[(m - 1, m)] = 4
    return edges


def _spo_b_edges(m: int, n: int) -> dict:
    # -2d1, d1-d2, ..., dm-e1, e1-e2, ..., en
    edges = _chain(m + n + 1, m)
    edges[(0, 1)] = 4
    edges[(m + n - 1, m + n)] = 4
    return edges


_PROPOSALS = {
    # -2d, d+e1+e2, -2e1, -2e2
    Family.D21A: {(0, 1): 12, (1, 2): 12, (1, 3): 12},
    # -d, (e1+e2+e3+d)/2, -e3, -e1+e3, e1-e2
    Family.F4: {(0, 1): 12, (1, 2): 12, (2, 3): 4, (3, 4): 3},
    # -2d, d-e1, e2-e3, -e2
    Family.G3: {(0, 1): 4, (1, 3): 12, (2, 3): 6},
}


def expected_graph(spec: AlgebraSpec) -> Optional[CoxeterMatrix]:
    """The asserted Coxeter matrix in extended-system order, if one is asserted.

    For the exceptional algebras this is a conjectured graph rather than a
    proven one; see ``is_proposal``.
    """
    f, m, n = spec.family, spec.m, spec.n
    if f is Family.GL:
        edges = _gl_edges(m, n)
    elif f is Family.SPO_D:
        edges = _spo_d_edges(m, n)
    elif f is Family.SPO_C:
        edges = _spo_c_edges(m)
    elif f is Family.SPO_B:
        edges = _spo_b_edges(m, n)
    else:
        edges = _PROPOSALS[f]
    return None if edges is None else _from_edges(spec, edges)


def is_proposal(spec: AlgebraSpec) -> bool:
    return spec.family.is_exceptional


def mismatches(
    computed: CoxeterMatrix, expected: CoxeterMatrix
) -> list[tuple[str, str, int, int]]:
    """Entries where the two matrices differ, as (x, y, computed, expected)."""
    if computed.labels != expected.labels:
        raise ValueError("label order differs")
    out = []
    k = len(computed)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = computed.entries[i][j], expected.entries[i][j]
            if a != b:
                out.append((computed.labels[i], computed.labels[j], a, b))
    return out


def classical_order(cat: AlgebraCatalog, a: RootVector, b: RootVector, limit: int = 64) -> int:
    """Order of ``s_a s_b`` as a linear map of the weight space.

    Only for non-isotropic ``a`` and ``b``.  This uses the ordinary Weyl
    group action and never looks at the Borels.
    """
    dim = cat.dimension
    basis = [RootVector.basis(dim, i) for i in range(dim)]

    def step(v: RootVector) -> RootVector:
        return even_reflect_vector(cat.form, a, even_reflect_vector(cat.form, b, v))

    cur = basis
    for k in range(1, limit + 1):
        cur = [step(v) for v in cur]
        if cur == basis:
            return k
    raise RuntimeError("order exceeds limit")


@dataclass(frozen=True)
class DisplayedCycle:
    """Cycle length of ``x . y`` through one displayed fundamental system."""

    algebra: str
    x: str
    y: str
    system: tuple[tuple[Fraction, ...], ...]
    length: int


def _sys(*rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(c) for c in r) for r in rows)


_H = Fraction(1, 2)

# coordinates in catalog basis order: D(2,1) and G(3) use (d, e1, e2) with
# e3 = -e1-e2 in G(3); F(4) uses (e1, e2, e3, d)
DISPLAYED_CYCLES = (
    DisplayedCycle("D(2,1)", "r[d+e1+e2]", "r[-2d]",
                   _sys((1, -1, -1), (0, 2, 0), (0, 0, 2)), 4),
    DisplayedCycle("D(2,1)", "r[d+e1+e2]", "r[-2d]",
                   _sys((0, 2, 0), (1, -1, -1), (-2, 0, 0)), 6),
    DisplayedCycle("F(4)", "r[(e1+e2+e3+d)/2]", "r[-e3]",
                   _sys((_H, _H, _H, _H), (-1, 0, 0, 0), (1, -1, 0, 0), (0, 1, -1, 0)), 4),
    DisplayedCycle("F(4)", "r[(e1+e2+e3+d)/2]", "r[-e3]",
                   _sys((_H, _H, _H, _H), (-_H, -_H, -_H, _H), (-_H, -_H, _H, -_H),
                        (0, 1, -1, 0)), 6),
    DisplayedCycle("G(3)", "r[-e2]", "r[d-e1]",
                   _sys((1, -1, 0), (0, 0, -1), (0, 1, 2)), 6),
    DisplayedCycle("G(3)", "r[-e2]", "r[d-e1]",
                   _sys((1, -1, -1), (0, 1, 0), (0, -1, 1)), 4),
)

# products whose full order is asserted alongside the proposals
PROPOSAL_ORDERS = (
    ("D(2,1)", "r[d+e1+e2]", "r[-2d]", 12),
    ("F(4)", "r[(e1+e2+e3+d)/2]", "r[-e3]", 12),
    ("G(3)", "r[-e2]", "r[d-e1]", 12),
)
