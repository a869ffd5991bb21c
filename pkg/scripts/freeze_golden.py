"""Regenerate src/superweyl/golden/values.json.

Counts come from the set-based oracle enumerator and group orders from
brute-force closure (of the whole group, or of a point stabilizer when the
group is too large to list), so neither depends on the generator closure
or on Schreier-Sims.  Run after any change that could move these numbers and
review the diff by hand.
"""

import json
import sys
from pathlib import Path

from superweyl.catalog import build_catalog, parse_spec
from superweyl.enumerator import enumerate_borels, enumerate_borels_oracle
from superweyl.permgroup import (
    brute_force_order,
    build_generator_table,
    stabilizer_closure_order,
)

OUT = Path(__file__).resolve().parents[1] / "src" / "superweyl" / "golden" / "values.json"

COUNT_ALGEBRAS = (
    "gl(1|2)", "gl(1|3)", "gl(2|2)", "gl(2|3)",
    "spo(2|2)", "spo(2|3)", "spo(2|5)", "spo(4|3)", "spo(2|4)", "spo(4|4)",
    "D(2,1)", "F(4)", "G(3)",
)

ORDER_ALGEBRAS = (
    "gl(1|2)", "gl(2|1)", "gl(1|3)", "gl(3|1)", "gl(2|2)",
    "spo(2|2)", "spo(2|3)", "spo(2|4)", "spo(2|5)", "spo(4|3)", "D(2,1)",
)

# too large to list whole; the point stabilizer is listed instead
STABILIZER_ALGEBRAS = ("spo(4|2)",)


def main() -> int:
    counts = {}
    for name in COUNT_ALGEBRAS:
        counts[name] = len(enumerate_borels_oracle(build_catalog(parse_spec(name))))
        print(f"count {name}: {counts[name]}", flush=True)
    orders = {}
    for name in ORDER_ALGEBRAS:
        cat = build_catalog(parse_spec(name))
        table = build_generator_table(cat, enumerate_borels(cat))
        n = brute_force_order(table)
        if n is None:
            print(f"order {name}: closure too large, skipped", flush=True)
            continue
        orders[name] = n
        print(f"order {name}: {n}", flush=True)
    for name in STABILIZER_ALGEBRAS:
        cat = build_catalog(parse_spec(name))
        n = stabilizer_closure_order(build_generator_table(cat, enumerate_borels(cat)))
        if n is None:
            print(f"order {name}: stabilizer too large, skipped", flush=True)
            continue
        orders[name] = n
        print(f"order {name}: {n} (stabilizer closure)", flush=True)
    doc = {"counts": counts, "group_orders": orders}
    OUT.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
