# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-map kernels, drop-in for ``cluspat._pure``.

Exponent tuple entries are handled as C long longs with explicit overflow
checks; an overflow raises OverflowError before any visible mutation, and
``cluspat._kernels`` then redoes the call with the pure kernels.
Coefficients stay Python objects throughout, so exactness is untouched.
"""

from cpython.long cimport PyLong_AsLongLong, PyLong_FromLongLong
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, \
    PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc

cdef long long LLMAX = 0x7fffffffffffffff


cdef inline tuple _tadd(tuple a, tuple b):
    cdef Py_ssize_t i, size = PyTuple_GET_SIZE(a)
    cdef long long x, y
    cdef tuple out = PyTuple_New(size)
    cdef object item
    for i in range(size):
        x = PyLong_AsLongLong(<object>PyTuple_GET_ITEM(a, i))
        y = PyLong_AsLongLong(<object>PyTuple_GET_ITEM(b, i))
        if (y > 0 and x > LLMAX - y) or (y < 0 and x < (-LLMAX - 1) - y):
            raise OverflowError("exponent sum leaves the machine range")
        item = PyLong_FromLongLong(x + y)
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


def tuple_add(tuple a, tuple b):
    return _tadd(a, b)


def min_exponents(dict terms):
    if not terms:
        raise ValueError("min_exponents of an empty term map")
    cdef Py_ssize_t size = -1, i
    cdef long long *lo = NULL
    cdef long long v
    cdef object key, item
    cdef tuple out
    try:
        for key in terms:
            if size < 0:
                size = PyTuple_GET_SIZE(<tuple>key)
                lo = <long long *>malloc(size * sizeof(long long))
                if lo == NULL:
                    raise MemoryError()
                for i in range(size):
                    lo[i] = PyLong_AsLongLong(
                        <object>PyTuple_GET_ITEM(<tuple>key, i))
            else:
                for i in range(size):
                    v = PyLong_AsLongLong(
                        <object>PyTuple_GET_ITEM(<tuple>key, i))
                    if v < lo[i]:
                        lo[i] = v
        out = PyTuple_New(size)
        for i in range(size):
            item = PyLong_FromLongLong(lo[i])
            Py_INCREF(item)
            PyTuple_SET_ITEM(out, i, item)
        return out
    finally:
        if lo != NULL:
            free(lo)


def add_terms(dict a, dict b):
    cdef dict out
    cdef object k, cb, cur, s
    if len(b) > len(a):
        a, b = b, a
    out = dict(a)
    for k, cb in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = cb
        else:
            s = cur + cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def scale_terms(dict terms, object c):
    cdef dict out = {}
    cdef object k, v
    for k, v in terms.items():
        out[k] = c * v
    return out


def shift_terms(dict terms, tuple shift):
    cdef dict out = {}
    cdef object k, v
    for k, v in terms.items():
        out[_tadd(<tuple>k, shift)] = v
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef object ka, ca, kb, cb, k, cur, prod
    if not a or not b:
        return out
    if len(b) > len(a):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = _tadd(<tuple>ka, <tuple>kb)
            prod = ca * cb
            cur = out.get(k)
            if cur is None:
                out[k] = prod
            else:
                cur = cur + prod
                if cur:
                    out[k] = cur
                else:
                    del out[k]
    return out


def sub_scaled_inplace(dict r, dict q, object c, tuple shift):
    # precompute every shifted key first so an overflow leaves r untouched
    cdef list keys = []
    cdef object kq, cq, k, cur, s
    for kq in q:
        keys.append(_tadd(<tuple>kq, shift))
    cdef list touched = []
    cdef Py_ssize_t i = 0
    for kq, cq in q.items():
        k = keys[i]
        i += 1
        cur = r.get(k)
        if cur is None:
            s = -(c * cq)
        else:
            s = cur - c * cq
        if s:
            r[k] = s
            touched.append(k)
        elif cur is not None:
            del r[k]
    return touched
