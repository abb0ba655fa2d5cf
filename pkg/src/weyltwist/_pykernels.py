"""Pure-Python kernels; same contract as the compiled ``_ckernels``."""

import numpy as np


def twisted_orbit_labels(left, right, twist):
    """Label the orbits of ``v -> s_i v s_twist[i]`` on element indices.

    ``left[i, v]`` and ``right[i, v]`` are the indices of ``s_i v`` and
    ``v s_i``. Classes are numbered by their smallest element index.
    Returns ``(labels, nclasses)``.
    """
    left_l = np.asarray(left).tolist()
    right_l = np.asarray(right).tolist()
    twist = [int(t) for t in twist]
    gens = [(left_l[i], right_l[twist[i]]) for i in range(len(twist))]
    n = len(left_l[0]) if left_l else 1
    labels = [-1] * n
    nclasses = 0
    for seed in range(n):
        if labels[seed] != -1:
            continue
        labels[seed] = nclasses
        stack = [seed]
        while stack:
            v = stack.pop()
            for lt, rt in gens:
                u = lt[rt[v]]
                if labels[u] == -1:
                    labels[u] = nclasses
                    stack.append(u)
        nclasses += 1
    return np.array(labels, dtype=np.int32), nclasses


def class_statistics(labels, lengths, nclasses):
    """Per-class size, maximal length, multiplicity of the maximum, and
    the first element index attaining it."""
    size = [0] * nclasses
    maxlen = [-1] * nclasses
    nmax = [0] * nclasses
    argmax = [-1] * nclasses
    for v, (c, ln) in enumerate(zip(np.asarray(labels).tolist(), np.asarray(lengths).tolist())):
        size[c] += 1
        if ln > maxlen[c]:
            maxlen[c] = ln
            nmax[c] = 1
            argmax[c] = v
        elif ln == maxlen[c]:
            nmax[c] += 1
    return tuple(np.array(x, dtype=np.int64) for x in (size, maxlen, nmax, argmax))
