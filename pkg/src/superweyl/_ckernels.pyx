# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled permutation kernels; same functions as ``_pykernels``."""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM
from cpython.ref cimport Py_INCREF
from libc.stdlib cimport malloc, free

from math import lcm

# small ints are cached once so building result tuples is cheap
cdef list _INTS = list(range(4096))


cdef inline object _int(Py_ssize_t v):
    if v < 4096:
        return <object>(<list>_INTS)[v]
    return v


cdef int* _load(object p, Py_ssize_t n) except NULL:
    cdef int* buf = <int*>malloc(n * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    if type(p) is tuple:
        for i in range(n):
            buf[i] = <object>PyTuple_GET_ITEM(p, i)
    else:
        for i in range(n):
            buf[i] = p[i]
    return buf


cdef tuple _store(int* buf, Py_ssize_t n):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = _int(buf[i])
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef tuple _compose_tt(tuple p, tuple q):
    cdef Py_ssize_t n = len(q), i
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = <object>PyTuple_GET_ITEM(p, <Py_ssize_t>(<object>PyTuple_GET_ITEM(q, i)))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def compose(p, q):
    if type(p) is not tuple:
        p = tuple(p)
    if type(q) is not tuple:
        q = tuple(q)
    return _compose_tt(<tuple>p, <tuple>q)


def invert(p):
    cdef Py_ssize_t n = len(p), i
    cdef int* a = _load(p, n)
    cdef int* b = <int*>malloc(n * sizeof(int)) if n else <int*>malloc(sizeof(int))
    try:
        for i in range(n):
            b[a[i]] = i
        return _store(b, n)
    finally:
        free(a)
        free(b)


def is_identity(p):
    cdef Py_ssize_t n = len(p), i
    if type(p) is tuple:
        for i in range(n):
            if <Py_ssize_t>(<object>PyTuple_GET_ITEM(p, i)) != i:
                return False
        return True
    for i in range(n):
        if p[i] != i:
            return False
    return True


def cycle_lengths(p):
    cdef Py_ssize_t n = len(p), i, j, k
    if n == 0:
        return []
    cdef int* a = _load(p, n)
    cdef char* seen = <char*>malloc(n)
    out = []
    try:
        for i in range(n):
            seen[i] = 0
        for i in range(n):
            if seen[i]:
                continue
            k = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = a[j]
                k += 1
            out.append(k)
        return out
    finally:
        free(a)
        free(seen)


def element_order(p):
    return lcm(*cycle_lengths(p)) if len(p) else 1


def power(p, long e):
    cdef tuple result = tuple(range(len(p)))
    cdef tuple base = tuple(p)
    while e > 0:
        if e & 1:
            result = _compose_tt(base, result)
        base = _compose_tt(base, base)
        e >>= 1
    return result


def orbit_transversal(gens, Py_ssize_t point):
    cdef Py_ssize_t n = len(gens[0]) if gens else 0
    cdef list gs = [tuple(g) for g in gens]
    cdef dict trans = {point: tuple(range(n))}
    cdef list queue = [point]
    cdef Py_ssize_t head = 0
    cdef tuple g
    while head < len(queue):
        x = queue[head]
        head += 1
        ux = trans[x]
        for g in gs:
            y = <object>PyTuple_GET_ITEM(g, <Py_ssize_t>x)
            if y not in trans:
                trans[y] = _compose_tt(g, <tuple>ux)
                queue.append(y)
    return trans


def sift(g, base, inv, Py_ssize_t start):
    cdef tuple h = g if type(g) is tuple else tuple(g)
    cdef Py_ssize_t i, nb = len(base)
    cdef dict level
    for i in range(start, nb):
        level = <dict>inv[i]
        v = level.get(<object>PyTuple_GET_ITEM(h, <Py_ssize_t>base[i]))
        if v is None:
            return h, i
        h = _compose_tt(<tuple>v, h)
    return h, nb


def closure_size(gens, long limit):
    if not gens:
        return 1
    cdef Py_ssize_t n = len(gens[0])
    if n > 256:
        raise ValueError("closure is only supported on at most 256 points")
    cdef list tables = [bytes(g) + bytes(256 - n) for g in gens]
    cdef bytes ident = bytes(range(n))
    cdef set seen = {ident}
    cdef list frontier = [ident], nxt
    cdef bytes x, y, t
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
