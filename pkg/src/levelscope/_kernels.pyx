# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdint cimport uint64_t, int64_t
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.unordered_map cimport unordered_map
from libcpp.algorithm cimport sort

import numpy as np


def poly_mul(ka, ca, kb, cb, p):
    cdef uint64_t P = p
    cdef vector[uint64_t] va, vca, vb, vcb
    cdef Py_ssize_t i, j, na, nb
    for k in ka:
        va.push_back(k)
    for c in ca:
        vca.push_back(c)
    for k in kb:
        vb.push_back(k)
    for c in cb:
        vcb.push_back(c)
    na = va.size()
    nb = vb.size()
    cdef unordered_map[uint64_t, uint64_t] acc
    acc.reserve(<size_t>(na + nb) * 4)
    cdef uint64_t k2, c2, key
    with nogil:
        for j in range(nb):
            k2 = vb[j]
            c2 = vcb[j]
            for i in range(na):
                key = va[i] + k2
                acc[key] = (acc[key] + vca[i] * c2) % P
    cdef vector[pair[uint64_t, uint64_t]] items
    items.reserve(acc.size())
    for kv in acc:
        if kv.second:
            items.push_back(kv)
    sort(items.begin(), items.end())
    keys = [kv.first for kv in items]
    coefs = [kv.second for kv in items]
    return keys, coefs


def rref(rows, p):
    if not rows:
        return [], []
    arr = np.array(rows, dtype=np.int64) % p
    cdef int64_t[:, ::1] m = arr
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, piv, t
    cdef int64_t P = p, inv, f, tmp
    pivots = []
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for t in range(ncols):
                tmp = m[r, t]
                m[r, t] = m[piv, t]
                m[piv, t] = tmp
        inv = _inv(m[r, c], P)
        if inv != 1:
            for t in range(c, ncols):
                m[r, t] = (m[r, t] * inv) % P
        for i in range(nrows):
            if i != r:
                f = m[i, c]
                if f != 0:
                    for t in range(c, ncols):
                        m[i, t] = (m[i, t] - f * m[r, t]) % P
                        if m[i, t] < 0:
                            m[i, t] += P
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return arr[:r].tolist(), pivots


cdef int64_t _inv(int64_t a, int64_t p) nogil:
    cdef int64_t result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result
