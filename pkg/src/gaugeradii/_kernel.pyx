# cython: language_level=3
"""Compiled tableau kernels.

Same semantics as `_kernel_py` (the pure-Python reference); the arithmetic
still runs on exact rational objects, Cython only removes the interpreter
overhead of the doubly nested pivot loop, which profiling shows dominates
every containment LP.
"""

BACKEND = "cython"


def pivot(list rows, Py_ssize_t pr, Py_ssize_t pc):
    """Gauss-Jordan pivot in place; see `_kernel_py.pivot` for the contract."""
    cdef list prow = <list>rows[pr]
    cdef Py_ssize_t ncols = len(prow)
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j
    cdef list row
    cdef object piv, inv, f, pj, a

    piv = prow[pc]
    if piv != 1:
        inv = 1 / piv
        for j in range(ncols):
            pj = prow[j]
            if pj:
                prow[j] = pj * inv
    for i in range(nrows):
        if i == pr:
            continue
        row = <list>rows[i]
        f = row[pc]
        if f:
            for j in range(ncols):
                pj = prow[j]
                if pj:
                    a = row[j]
                    row[j] = a - f * pj


def dot(u, v):
    """Exact dot product of two equal-length sequences, skipping zeros."""
    cdef object total = 0
    cdef object a, b
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total
