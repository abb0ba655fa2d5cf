# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def twisted_orbit_labels(left, right, twist):
    cdef cnp.int32_t[:, ::1] lt = np.ascontiguousarray(left, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] rt = np.ascontiguousarray(right, dtype=np.int32)
    cdef cnp.int32_t[::1] tw = np.ascontiguousarray(twist, dtype=np.int32)
    cdef Py_ssize_t r = lt.shape[0]
    cdef Py_ssize_t n = lt.shape[1]
    labels_arr = np.full(n, -1, dtype=np.int32)
    stack_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] labels = labels_arr
    cdef cnp.int32_t[::1] stack = stack_arr
    cdef Py_ssize_t seed, top, i
    cdef cnp.int32_t v, u, nclasses = 0
    for seed in range(n):
        if labels[seed] != -1:
            continue
        labels[seed] = nclasses
        stack[0] = <cnp.int32_t>seed
        top = 1
        while top:
            top -= 1
            v = stack[top]
            for i in range(r):
                u = lt[i, rt[tw[i], v]]
                if labels[u] == -1:
                    labels[u] = nclasses
                    stack[top] = u
                    top += 1
        nclasses += 1
    return labels_arr, int(nclasses)


def class_statistics(labels, lengths, Py_ssize_t nclasses):
    cdef cnp.int32_t[::1] lab = np.ascontiguousarray(labels, dtype=np.int32)
    cdef cnp.int64_t[::1] ln = np.ascontiguousarray(lengths, dtype=np.int64)
    size_a = np.zeros(nclasses, dtype=np.int64)
    maxlen_a = np.full(nclasses, -1, dtype=np.int64)
    nmax_a = np.zeros(nclasses, dtype=np.int64)
    argmax_a = np.full(nclasses, -1, dtype=np.int64)
    cdef cnp.int64_t[::1] size = size_a
    cdef cnp.int64_t[::1] maxlen = maxlen_a
    cdef cnp.int64_t[::1] nmax = nmax_a
    cdef cnp.int64_t[::1] argmax = argmax_a
    cdef Py_ssize_t v, c
    cdef cnp.int64_t x
    for v in range(lab.shape[0]):
        c = lab[v]
        x = ln[v]
        size[c] += 1
        if x > maxlen[c]:
            maxlen[c] = x
            nmax[c] = 1
            argmax[c] = v
        elif x == maxlen[c]:
            nmax[c] += 1
    return size_a, maxlen_a, nmax_a, argmax_a
