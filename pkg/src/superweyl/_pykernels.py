"""Pure-Python permutation kernels.

Permutations are tuples of ints; ``compose(p, q)`` is ``p`` after ``q``.
The compiled module ``_ckernels`` exposes the same functions.
"""

from __future__ import annotations

from collections import deque
from math import lcm
from typing import Sequence

Perm = tuple[int, ...]


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    return tuple([p[x] for x in q])


def invert(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_identity(p: Sequence[int]) -> bool:
    for i, x in enumerate(p):
        if i != x:
            return False
    return True


def cycle_lengths(p: Sequence[int]) -> list[int]:
    n = len(p)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            k += 1
        out.append(k)
    return out


def element_order(p: Sequence[int]) -> int:
    return lcm(*cycle_lengths(p)) if len(p) else 1


def power(p: Sequence[int], e: int) -> Perm:
    n = len(p)
    result = tuple(range(n))
    base = tuple(p)
    while e > 0:
        if e & 1:
            result = compose(base, result)
        base = compose(base, base)
        e >>= 1
    return result


def orbit_transversal(gens: Sequence[Sequence[int]], point: int) -> dict[int, Perm]:
    """Map each orbit point ``x`` to a word value ``u`` with ``u[point] == x``."""
    n = len(gens[0]) if gens else 0
    ident = tuple(range(n))
    trans = {point: ident}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        ux = trans[x]
        for g in gens:
            y = g[x]
            if y not in trans:
                trans[y] = compose(g, ux)
                queue.append(y)
    return trans


def sift(
    g: Sequence[int], base: Sequence[int], inv: Sequence[dict], start: int
) -> tuple[Perm, int]:
    """Strip ``g`` through levels ``start..``; return the residue and the level it stopped at."""
    g = tuple(g)
    for i in range(start, len(base)):
        v = inv[i].get(g[base[i]])
        if v is None:
            return g, i
        g = compose(v, g)
    return g, len(base)


def closure_size(gens: Sequence[Sequence[int]], limit: int) -> int:
    """Count group elements by multiplying until closed; -1 once ``limit`` is passed."""
    if not gens:
        return 1
    n = len(gens[0])
    if n > 256:
        raise ValueError("closure is only supported on at most 256 points")
    # elements are stored as bytes; bytes.translate applies a generator
    tables = [bytes(g) + bytes(256 - n) for g in gens]
    ident = bytes(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for t in tables:
                y = x.translate(t)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            return -1
        frontier = nxt
    return len(seen)
