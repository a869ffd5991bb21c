"""Command-line entry point: ``superweyl <command> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Optional

from . import coxeter as cx
from . import defseq as ds
from .catalog import AlgebraCatalog, AlgebraSpec, Family, SpecError, build_catalog, parse_spec
from .enumerator import (
    BorelSet,
    TooLargeError,
    enumerate_borels,
    enumerate_borels_oracle,
    expected_count,
)
from .permgroup import (
    GeneratorTable,
    build_generator_table,
    check_relations,
    compose,
    element_order,
    group_order,
    orbit_length,
    parse_relations,
)
from .reflection import apply_generator, canonical_key, generators
from .rootspace import RootVector

GOLDEN_DIR = Path(__file__).with_name("golden")

# counts stated outright for these algebras
STATED_COUNTS = {
    "gl(1|2)": 6,
    "gl(1|3)": 24,
    "gl(2|2)": 24,
    "gl(2|3)": 120,
    "spo(2|2)": 6,
    "spo(2|3)": 8,
    "spo(2|5)": 48,
    "spo(4|3)": 48,
    "spo(2|4)": 32,
    "spo(4|4)": 288,
}

COXETER_SUITE = (
    "gl(1|2)", "gl(2|2)", "gl(2|3)", "gl(1|3)", "gl(3|2)",
    "spo(2|2)", "spo(4|4)", "spo(2|4)", "spo(4|2)", "spo(6|2)",
    "spo(4|5)", "spo(6|3)", "spo(2|3)", "spo(2|5)", "spo(4|3)",
)

EXCEPTIONAL = ("D(2,1)", "F(4)", "G(3)")


def golden_dir() -> Path:
    env = os.environ.get("SUPERWEYL_GOLDEN_DIR")
    return Path(env) if env else GOLDEN_DIR


def load_golden_values() -> dict:
    return json.loads((golden_dir() / "values.json").read_text())


# -- cached pipeline -------------------------------------------------------


@lru_cache(maxsize=None)
def _catalog(spec: AlgebraSpec) -> AlgebraCatalog:
    return build_catalog(spec)


@lru_cache(maxsize=None)
def _borels(spec: AlgebraSpec) -> BorelSet:
    return enumerate_borels(_catalog(spec))


@lru_cache(maxsize=None)
def _table(spec: AlgebraSpec) -> GeneratorTable:
    return build_generator_table(_catalog(spec), _borels(spec))


def _spec(text: str, alpha: Optional[str] = None) -> AlgebraSpec:
    spec = parse_spec(text)
    if alpha is not None:
        if spec.family is not Family.D21A:
            raise SpecError("--alpha only applies to D(2,1)")
        spec = AlgebraSpec(Family.D21A, alpha=Fraction(alpha))
    return spec


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands --------------------------------------------------------------


def cmd_enumerate(args) -> int:
    spec = _spec(args.algebra, args.alpha)
    cat = _catalog(spec)
    borels = _borels(spec)
    if args.format == "json":
        doc = {
            "algebra": str(spec),
            "count": len(borels),
            "systems": [
                {
                    "id": i,
                    "roots": [r.as_pairs() for r in fs.ordered_roots],
                    "isotropic_simple": [cat.isotropic(r) for r in fs.ordered_roots],
                }
                for i, fs in enumerate(borels)
            ],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        if args.out:
            print(f"count: {len(borels)}")
        return 0
    lines = [f"algebra: {spec}", f"count: {len(borels)}"]
    if args.out or args.verbose:
        for i, fs in enumerate(borels):
            names = ", ".join(
                cat.label(r) + ("*" if cat.isotropic(r) else "") for r in fs.ordered_roots
            )
            lines.append(f"{i:>6}  {names}")
    _emit("\n".join(lines) + "\n", args.out)
    if args.out:
        print(f"count: {len(borels)}")
    return 0


def cmd_coxeter(args) -> int:
    spec = _spec(args.algebra, args.alpha)
    mat = cx.coxeter_matrix(_table(spec), jobs=args.jobs)
    if args.format == "dot":
        text = cx.emit_dot(mat)
    elif args.format == "json":
        text = mat.to_json(str(spec))
    else:
        text = mat.to_text()
    _emit(text, args.out)
    return 0


def cmd_group_order(args) -> int:
    spec = _spec(args.algebra, args.alpha)
    res = group_order(_table(spec))
    text = (
        f"algebra: {spec}\n"
        f"order: {res.order}\n"
        f"base length: {len(res.base)}\n"
        f"strong generators: {res.strong_generator_count}\n"
    )
    _emit(text, args.out)
    return 0


def cmd_defseq(args) -> int:
    spec = _spec(args.algebra, args.alpha)
    cat = _catalog(spec)
    borels = _borels(spec)
    rows = [(i, ds.encode(cat, fs).format(spec.m)) for i, fs in enumerate(borels)]
    if args.format == "json":
        doc = {
            "algebra": str(spec),
            "systems": [{"id": i, "sequence": seq} for i, seq in rows],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = "".join(f"{i:>6}  {' '.join(seq)}\n" for i, seq in rows)
    _emit(text, args.out)
    return 0


# -- verification ----------------------------------------------------------


@dataclass
class Check:
    ident: str
    description: str
    expected: object
    actual: object
    passed: bool
    hard: bool = True


@dataclass
class VerifyReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, ident, description, expected, actual, hard=True, passed=None) -> None:
        ok = (expected == actual) if passed is None else passed
        self.checks.append(Check(ident, description, expected, actual, ok, hard))

    @property
    def status(self) -> int:
        return 0 if all(c.passed for c in self.checks if c.hard) else 1

    def render(self) -> str:
        lines = []
        for c in self.checks:
            tag = "PASS" if c.passed else ("FAIL" if c.hard else "NOTE")
            lines.append(
                f"[{tag}] {c.ident}: {c.description} "
                f"(expected {c.expected}, got {c.actual})"
            )
        hard = [c for c in self.checks if c.hard]
        failed = sum(not c.passed for c in hard)
        lines.append(
            f"suite {self.suite}: {len(hard) - failed}/{len(hard)} hard checks passed"
        )
        return "\n".join(lines) + "\n"


def _rank_specs(max_rank: int) -> list[str]:
    out = []
    for k in range(2, max_rank + 1):
        for m in range(1, k):
            out.append(f"gl({m}|{k - m})")
        for m in range(1, k):
            out.append(f"spo({2 * m}|{2 * (k - m)})")
            out.append(f"spo({2 * m}|{2 * (k - m) + 1})")
    out.append("spo(2|2)")
    return sorted(set(out), key=lambda s: (len(s), s))


def suite_counts(rep: VerifyReport, max_rank: int = 5, **_) -> None:
    golden = load_golden_values()["counts"]
    for name in _rank_specs(max_rank):
        spec = parse_spec(name)
        n = len(_borels(spec))
        rep.add(f"count:{name}", "enumerated count equals the closed formula",
                expected_count(spec), n)
    for name, value in STATED_COUNTS.items():
        rep.add(f"stated:{name}", "enumerated count equals the stated count",
                value, len(_borels(parse_spec(name))))
    for name in list(STATED_COUNTS) + list(EXCEPTIONAL):
        spec = parse_spec(name)
        ok = _borels(spec).keys() == enumerate_borels_oracle(_catalog(spec)).keys()
        rep.add(f"oracle:{name}", "generator closure and set closure agree",
                True, ok)
    for name in EXCEPTIONAL:
        rep.add(f"count:{name}", "enumerated count equals the frozen oracle value",
                golden[name], len(_borels(parse_spec(name))))


def _pair(spec: AlgebraSpec, x: str, y: str) -> int:
    t = _table(spec)
    return element_order(compose(t.perm(x), t.perm(y)))


def suite_coxeter(rep: VerifyReport, jobs: int = 1, **_) -> None:
    for name, x, y, want in (
        ("gl(1|2)", "r[e1-e2]", "r[d1-e1]", 6),
        ("gl(2|2)", "r[d2-e1]", "r[e1-e2]", 12),
        ("gl(2|2)", "r[d1-d2]", "r[d2-e1]", 12),
        ("gl(2|2)", "r[d1-d2]", "r[e1-e2]", 2),
        ("spo(2|2)", "r[-d1+e1]", "r[2d1]", 6),
        ("spo(2|3)", "r[-2d1]", "r[d1-e1]", 4),
        ("spo(2|3)", "r[d1-e1]", "r[e1]", 4),
    ):
        rep.add(f"order:{name}:{x}.{y}", "order of a generator product",
                want, _pair(parse_spec(name), x, y))
    for name in COXETER_SUITE:
        spec = parse_spec(name)
        cat = _catalog(spec)
        mat = cx.coxeter_matrix(_table(spec), jobs=jobs)
        exp = cx.expected_graph(spec)
        bad = cx.mismatches(mat, exp)
        rep.add(f"graph:{name}", "Coxeter matrix equals the asserted graph",
                [], bad)
        even = [g for g in generators(cat) if not g.is_odd]
        sub = mat.even_part()
        want = [[1 if a is b else cx.classical_order(cat, a.root, b.root) for b in even]
                for a in even]
        rep.add(f"even:{name}", "even block equals the classical Weyl data",
                want, [list(r) for r in sub.entries])
    dot = cx.emit_dot(cx.coxeter_matrix(_table(parse_spec("gl(2|3)"))))
    rep.add("dot:gl(2|3)", "DOT output has two 12-edges and one filled node",
            (2, 1), (dot.count('[label="12"]'), dot.count("fillcolor=black")))


def suite_defseq(rep: VerifyReport, **_) -> None:
    for name in STATED_COUNTS:
        spec = parse_spec(name)
        cat = _catalog(spec)
        borels = _borels(spec)
        seqs = [ds.encode(cat, fs) for fs in borels]
        rep.add(f"injective:{name}", "distinct systems get distinct sequences",
                len(borels), len(set(seqs)))
        rt = all(ds.decode(cat, s, borels) == fs for s, fs in zip(seqs, borels))
        rep.add(f"roundtrip:{name}", "decode inverts encode", True, rt)
        bad = 0
        for fs, s in zip(borels, seqs):
            for g in generators(cat):
                img = apply_generator(cat, g, fs)
                if ds.encode(cat, img) != ds.sequence_action(cat, g, s):
                    bad += 1
        rep.add(f"equivariant:{name}", "encode(g.fs) equals the sequence rule",
                0, bad)
        moved = len(ds.path_dependence(cat, borels))
        rep.add(f"path:{name}", "images whose ordering differs from the stored one",
                "-", moved, hard=False, passed=True)


def suite_presentations(rep: VerifyReport, **_) -> None:
    files = sorted((golden_dir() / "relations").glob("*.rel"))
    if not files:
        rep.add("relations", "relation files present", ">0", 0)
    for path in files:
        rf = parse_relations(path.read_text())
        spec = parse_spec(rf.algebra)
        results = check_relations(_table(spec), rf.relations)
        should_hold = not path.name.endswith(".false.rel")
        for rel, ok in zip(rf.relations, results):
            what = "relation holds" if should_hold else "control relation fails"
            rep.add(f"{path.name}:{rel.text}", what, should_hold, ok)


def suite_groups(rep: VerifyReport, **_) -> None:
    golden = load_golden_values()["group_orders"]
    for name, value in golden.items():
        rep.add(f"group:{name}", "Schreier-Sims order equals the frozen closure order",
                value, group_order(_table(parse_spec(name))).order)
    for name in STATED_COUNTS:
        spec = parse_spec(name)
        rep.add(f"even-group:{name}", "even generators give the classical Weyl group",
                classical_weyl_order(spec), group_order(_table(spec).even_part()).order)


def classical_weyl_order(spec: AlgebraSpec) -> int:
    from math import factorial

    m, n, f = spec.m, spec.n, spec.family
    if f is Family.GL:
        return factorial(m) * factorial(n)
    if f in (Family.SPO_D, Family.SPO_C):
        return 2**m * factorial(m) * 2 ** (n - 1) * factorial(n)
    if f is Family.SPO_B:
        return 2**m * factorial(m) * 2**n * factorial(n)
    raise ValueError(f"no classical formula for {spec}")


def suite_exceptional(rep: VerifyReport, strict: bool = False, **_) -> None:
    golden = load_golden_values()["counts"]
    for name in EXCEPTIONAL:
        rep.add(f"count:{name}", "enumeration terminates with the frozen count",
                golden[name], len(_borels(parse_spec(name))))
    for name, x, y, want in cx.PROPOSAL_ORDERS:
        rep.add(f"order:{name}:{x}.{y}", "order of the computed product",
                want, _pair(parse_spec(name), x, y))
    for d in cx.DISPLAYED_CYCLES:
        spec = parse_spec(d.algebra)
        t = _table(spec)
        roots = [RootVector(r) for r in d.system]
        b = _borels(spec).index.get(canonical_key(roots))
        got = None if b is None else orbit_length(compose(t.perm(d.x), t.perm(d.y)), b)
        rep.add(f"cycle:{d.algebra}:{d.length}", "cycle through a displayed system",
                d.length, got)
    for name in EXCEPTIONAL:
        spec = parse_spec(name)
        bad = cx.mismatches(cx.coxeter_matrix(_table(spec)), cx.expected_graph(spec))
        rep.add(f"proposal:{name}", "Coxeter matrix against the proposed graph",
                [], bad, hard=strict)


SUITES: dict[str, Callable] = {
    "counts": suite_counts,
    "coxeter": suite_coxeter,
    "defseq": suite_defseq,
    "presentations": suite_presentations,
    "groups": suite_groups,
    "exceptional": suite_exceptional,
}


def run_suite(name: str, **opts) -> VerifyReport:
    names = list(SUITES) if name == "all" else [name]
    rep = VerifyReport(name)
    for n in names:
        SUITES[n](rep, **opts)
    return rep


def cmd_verify(args) -> int:
    rep = run_suite(args.suite, strict=args.strict, jobs=args.jobs, max_rank=args.max_rank)
    _emit(rep.render(), args.out)
    return rep.status


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="superweyl",
        description="Fundamental systems, super Weyl groups and Coxeter graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats, default):
        sp.add_argument("--algebra", required=True, help='e.g. "gl(2|3)", "spo(4|5)", "F(4)"')
        sp.add_argument("--alpha", help="P/Q value for D(2,1); generic if omitted")
        if formats:
            sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", help="write output to this file")

    sp = sub.add_parser("enumerate", help="list fundamental systems")
    common(sp, ["text", "json"], "text")
    sp.add_argument("--verbose", action="store_true", help="list systems in text mode")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("coxeter", help="Coxeter matrix or graph")
    common(sp, ["dot", "text", "json"], "text")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_coxeter)

    sp = sub.add_parser("group-order", help="order of the super Weyl group")
    common(sp, None, None)
    sp.set_defaults(func=cmd_group_order)

    sp = sub.add_parser("defseq", help="defining sequences of all systems")
    common(sp, ["text", "json"], "text")
    sp.set_defaults(func=cmd_defseq)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    sp.add_argument("--strict", action="store_true",
                    help="make proposal graph agreement a hard check")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--max-rank", type=int, default=5, help="largest m+n for the counts suite")
    sp.add_argument("--out", help="write the report to this file")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, TooLargeError, ds.ShapeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
