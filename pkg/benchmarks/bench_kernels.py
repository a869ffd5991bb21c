"""Compiled vs pure-Python permutation kernels.

    python3 benchmarks/bench_kernels.py [--algebra "spo(4|4)"] [--repeat 3]

Micro-benchmarks call both kernel modules directly on permutations of the
algebra's Borel set.  The end-to-end row runs Schreier-Sims in a child
process once per backend, selected through SUPERWEYL_PURE.
"""

import argparse
import os
import subprocess
import sys
import timeit

from superweyl import _pykernels as pure
from superweyl.catalog import build_catalog, parse_spec
from superweyl.enumerator import enumerate_borels
from superweyl.permgroup import build_generator_table

try:
    from superweyl import _ckernels as compiled
except ImportError:
    compiled = None

CHILD = (
    "import time,sys;"
    "from superweyl import kernels;"
    "from superweyl.catalog import build_catalog, parse_spec;"
    "from superweyl.enumerator import enumerate_borels;"
    "from superweyl.permgroup import build_generator_table, group_order;"
    "c=build_catalog(parse_spec(sys.argv[1]));t=build_generator_table(c,enumerate_borels(c));"
    "s=time.perf_counter();r=group_order(t);"
    "print(kernels.BACKEND, r.order, time.perf_counter()-s)"
)


def micro(mod, perms, repeat):
    p, q = perms[0], perms[-1]
    pq = mod.compose(p, q)
    cases = {
        "compose": lambda: mod.compose(p, q),
        "invert": lambda: mod.invert(pq),
        "element_order": lambda: mod.element_order(pq),
        "power(p, 1000)": lambda: mod.power(pq, 1000),
        "orbit_transversal": lambda: mod.orbit_transversal(list(perms), 0),
    }
    out = {}
    for name, fn in cases.items():
        number = 2000 if name != "orbit_transversal" else 20
        best = min(timeit.repeat(fn, number=number, repeat=repeat))
        out[name] = best / number
    return out


def end_to_end(algebra, pure_backend):
    env = dict(os.environ)
    if pure_backend:
        env["SUPERWEYL_PURE"] = "1"
    else:
        env.pop("SUPERWEYL_PURE", None)
    r = subprocess.run([sys.executable, "-c", CHILD, algebra], env=env,
                       capture_output=True, text=True, check=True)
    backend, order, secs = r.stdout.split()
    return backend, int(order), float(secs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--algebra", default="spo(4|4)")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()

    cat = build_catalog(parse_spec(args.algebra))
    table = build_generator_table(cat, enumerate_borels(cat))
    print(f"{args.algebra}: degree {table.degree}, {len(table)} generators")
    if compiled is None:
        print("compiled kernels are not built; only the pure timings are shown")
    py = micro(pure, table.perms, args.repeat)
    cy = micro(compiled, table.perms, args.repeat) if compiled else {}
    print(f"{'kernel':<20}{'pure (us)':>12}{'compiled (us)':>15}{'speedup':>9}")
    for name, t in py.items():
        c = cy.get(name)
        cs = f"{c * 1e6:15.2f}{t / c:9.1f}" if c else f"{'-':>15}{'-':>9}"
        print(f"{name:<20}{t * 1e6:12.2f}{cs}")
    if not args.skip_end_to_end:
        rows = [end_to_end(args.algebra, True)]
        if compiled:
            rows.append(end_to_end(args.algebra, False))
        for backend, order, secs in rows:
            print(f"schreier-sims [{backend}]: {secs:.2f}s, order {order}")
        if len({o for _, o, _ in rows}) != 1:
            sys.exit("backends disagree on the group order")


if __name__ == "__main__":
    main()
