# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops; same contracts as ``_pykernels``."""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_Next
from cpython.object cimport PyObject

from ._pykernels import gcd_cross_sum as _py_cross, gcd_pairwise_sum as _py_pairwise

DEF MAXPARTS = 128


cdef inline long _gcd(long a, long b) nogil:
    cdef long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def mul_accumulate(dict acc, dict a, dict b, object scale):
    cdef Py_ssize_t pos_a = 0, i, nb
    cdef PyObject *pka
    cdef PyObject *pva
    cdef PyObject *old
    cdef object sva, k
    cdef list bkeys, bvals
    if not scale or not a or not b:
        return
    bkeys = list(b.keys())
    bvals = list(b.values())
    nb = len(bkeys)
    while PyDict_Next(a, &pos_a, &pka, &pva):
        sva = (<object>pva) * scale
        for i in range(nb):
            k = (<object>pka) + bkeys[i]
            old = PyDict_GetItem(acc, k)
            if old is NULL:
                PyDict_SetItem(acc, k, sva * bvals[i])
            else:
                PyDict_SetItem(acc, k, (<object>old) + sva * bvals[i])


def add_accumulate(dict acc, dict a, object scale):
    cdef Py_ssize_t pos = 0
    cdef PyObject *pk
    cdef PyObject *pv
    cdef PyObject *old
    if not scale:
        return
    while PyDict_Next(a, &pos, &pk, &pv):
        old = PyDict_GetItem(acc, <object>pk)
        if old is NULL:
            PyDict_SetItem(acc, <object>pk, (<object>pv) * scale)
        else:
            PyDict_SetItem(acc, <object>pk, (<object>old) + (<object>pv) * scale)


cdef Py_ssize_t _fill(object parts, long *buf):
    cdef Py_ssize_t n = 0
    for p in parts:
        if n == MAXPARTS:
            return -1
        buf[n] = p
        n += 1
    return n


def gcd_cross_sum(mu, nu):
    cdef long bm[MAXPARTS]
    cdef long bn[MAXPARTS]
    cdef Py_ssize_t lm, ln, i, j
    cdef long total = 0, x
    lm = _fill(mu, bm)
    ln = _fill(nu, bn)
    if lm < 0 or ln < 0:
        return _py_cross(mu, nu)
    for i in range(lm):
        x = bm[i]
        for j in range(ln):
            total += _gcd(x, bn[j])
    return total


def gcd_pairwise_sum(mu):
    cdef long bm[MAXPARTS]
    cdef Py_ssize_t lm, i, j
    cdef long total = 0, x
    lm = _fill(mu, bm)
    if lm < 0:
        return _py_pairwise(mu)
    for i in range(lm):
        x = bm[i]
        for j in range(i + 1, lm):
            total += _gcd(x, bm[j])
    return total
