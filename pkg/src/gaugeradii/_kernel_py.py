"""Pure-Python tableau kernels.

Reference implementation of the pivot loop that dominates every LP solve.
`_kernel.pyx` compiles the identical logic; results must match bit for bit,
which `tests/test_kernel.py` asserts whenever the extension is available.
"""

BACKEND = "python"


def pivot(rows, pr, pc):
    """Gauss-Jordan pivot in place: normalize row ``pr`` by its ``pc`` entry,
    then eliminate column ``pc`` from every other row.

    ``rows`` is a list of equal-length lists of exact rationals.  Zero entries
    are skipped explicitly; the containment tableaus this library builds are
    block-sparse and the zero test is far cheaper than a rational multiply.
    """
    prow = rows[pr]
    piv = prow[pc]
    ncols = len(prow)
    if piv != 1:
        inv = 1 / piv
        for j in range(ncols):
            if prow[j]:
                prow[j] = prow[j] * inv
    for i in range(len(rows)):
        if i == pr:
            continue
        row = rows[i]
        f = row[pc]
        if f:
            for j in range(ncols):
                pj = prow[j]
                if pj:
                    row[j] = row[j] - f * pj


def dot(u, v):
    """Exact dot product of two equal-length sequences, skipping zeros."""
    total = 0
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total
