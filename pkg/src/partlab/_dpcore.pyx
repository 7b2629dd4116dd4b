# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled DP kernels.

Same contract as _dpcore_py: in-place layer updates on a Python list of
exact (arbitrary-precision) integers.  The win over the fallback is loop
and indexing overhead; the big-integer additions themselves are shared.
"""

BACKEND = "cython"


def unbounded_layer(list values, Py_ssize_t a):
    cdef Py_ssize_t v, n = len(values)
    for v in range(a, n):
        values[v] = values[v] + values[v - a]


def restricted_layer(list values, offsets):
    cdef Py_ssize_t n = len(values)
    cdef Py_ssize_t k = len(offsets)
    cdef Py_ssize_t[64] offs
    cdef Py_ssize_t i, v, off
    if k > 64:
        # More admissible multiples than the stack buffer holds; stay general.
        _restricted_layer_general(values, offsets)
        return
    for i in range(k):
        offs[i] = offsets[i]
    for v in range(n - 1, 0, -1):
        acc = values[v]
        for i in range(k):
            off = offs[i]
            if off > v:
                break
            acc = acc + values[v - off]
        values[v] = acc


def _restricted_layer_general(list values, offsets):
    cdef Py_ssize_t v, n = len(values)
    for v in range(n - 1, 0, -1):
        acc = values[v]
        for off in offsets:
            if off > v:
                break
            acc = acc + values[v - off]
        values[v] = acc
