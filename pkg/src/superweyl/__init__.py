"""Super Weyl groups of basic classical Lie superalgebras.

Fundamental systems are enumerated under even and odd reflections, the
simple super-reflections become permutations of that set, and everything
else (group orders, Coxeter matrices, defining sequences) is read off
those permutations.
"""

from .catalog import AlgebraSpec, Family, SpecError, build_catalog, parse_spec
from .enumerator import enumerate_borels, enumerate_borels_oracle, expected_count
from .permgroup import build_generator_table, group_order
from .coxeter import coxeter_matrix, emit_dot, expected_graph

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "Family",
    "SpecError",
    "build_catalog",
    "parse_spec",
    "enumerate_borels",
    "enumerate_borels_oracle",
    "expected_count",
    "build_generator_table",
    "group_order",
    "coxeter_matrix",
    "emit_dot",
    "expected_graph",
]
