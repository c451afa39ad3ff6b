# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for centered residue arithmetic.

Same contract as ``pyref``: int64 arrays reduced into
``[-(q//2), (q-1)//2]``, modulus at most 2**62.  Products and long
accumulations run in 128-bit integers, so they are exact for every
modulus the public layer accepts.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

cdef extern from *:
    ctypedef long long int128 "__int128"


cdef inline int64_t _creduce(int128 x, int64_t q) nogil:
    cdef int64_t r = <int64_t>(x % q)   # C remainder: sign follows dividend
    if r < 0:
        r += q
    if r >= (q + 1) // 2:
        r -= q
    return r


def reduce_center(cnp.ndarray values, q):
    cdef cnp.ndarray[int64_t, ndim=1] a = np.ascontiguousarray(values.ravel(), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(a.shape[0], dtype=np.int64)
    cdef int64_t qq = q
    cdef Py_ssize_t i
    for i in range(a.shape[0]):
        out[i] = _creduce(a[i], qq)
    return out.reshape(values.shape)


def add_mod(cnp.ndarray a, cnp.ndarray b, q):
    cdef cnp.ndarray[int64_t, ndim=1] x = np.ascontiguousarray(a.ravel(), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] y = np.ascontiguousarray(b.ravel(), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(x.shape[0], dtype=np.int64)
    cdef int64_t qq = q
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        out[i] = _creduce(<int128>x[i] + y[i], qq)
    return out.reshape(a.shape)


def sub_mod(cnp.ndarray a, cnp.ndarray b, q):
    cdef cnp.ndarray[int64_t, ndim=1] x = np.ascontiguousarray(a.ravel(), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] y = np.ascontiguousarray(b.ravel(), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(x.shape[0], dtype=np.int64)
    cdef int64_t qq = q
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        out[i] = _creduce(<int128>x[i] - y[i], qq)
    return out.reshape(a.shape)


def neg_mod(cnp.ndarray a, q):
    cdef cnp.ndarray[int64_t, ndim=1] x = np.ascontiguousarray(a.ravel(), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(x.shape[0], dtype=np.int64)
    cdef int64_t qq = q
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        out[i] = _creduce(-<int128>x[i], qq)
    return out.reshape(a.shape)


def scale_mod(c, cnp.ndarray a, q):
    cdef int64_t cc
    cdef int64_t qq = q
    c = int(c) % q
    if c >= (q + 1) // 2:
        c -= q
    cc = c
    cdef cnp.ndarray[int64_t, ndim=1] x = np.ascontiguousarray(a.ravel(), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(x.shape[0], dtype=np.int64)
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        out[i] = _creduce(<int128>cc * x[i], qq)
    return out.reshape(a.shape)


def sum_rows_mod(cnp.ndarray rows, q):
    cdef cnp.ndarray[int64_t, ndim=2] r = np.ascontiguousarray(rows, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.zeros(r.shape[1], dtype=np.int64)
    cdef int64_t qq = q
    cdef Py_ssize_t i, k
    cdef int128 acc
    for k in range(r.shape[1]):
        acc = 0
        for i in range(r.shape[0]):
            acc += r[i, k]
        out[k] = _creduce(acc, qq)
    return out


def last_share(cnp.ndarray message, cnp.ndarray partial, q):
    cdef cnp.ndarray[int64_t, ndim=1] m = np.ascontiguousarray(message, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] s = np.ascontiguousarray(partial, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(m.shape[0], dtype=np.int64)
    cdef int64_t qq = q
    cdef Py_ssize_t i, k
    cdef int128 acc
    for k in range(m.shape[0]):
        acc = m[k]
        for i in range(s.shape[0]):
            acc -= s[i, k]
        out[k] = _creduce(acc, qq)
    return out


def masked_residual(cnp.ndarray own_mask, cnp.ndarray contributions,
                    cnp.ndarray weights, cnp.ndarray own_quantized, q):
    cdef cnp.ndarray[int64_t, ndim=1] phi = np.ascontiguousarray(own_mask, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] zeta = np.ascontiguousarray(contributions, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] qz = np.ascontiguousarray(own_quantized, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(phi.shape[0], dtype=np.int64)
    cdef int64_t qq = q
    cdef Py_ssize_t j, k
    cdef int128 acc, wtot
    wtot = 0
    for j in range(w.shape[0]):
        wtot += w[j]
    for k in range(phi.shape[0]):
        acc = phi[k]
        for j in range(zeta.shape[0]):
            acc += zeta[j, k]
        acc -= wtot * <int128>qz[k]
        out[k] = _creduce(acc, qq)
    return out
