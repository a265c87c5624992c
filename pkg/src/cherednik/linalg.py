"""Small exact linear algebra over the scalar tower.

Matrices are plain lists of row lists.  Entries are QuadExt (field mode)
or ParamPoly (domain mode; rank via fraction-free Bareiss elimination, so
symbolic rank means rank over the fraction field).
"""

from __future__ import annotations

from .scalars import ParamPoly


def _exact_div(x, y):
    if isinstance(x, ParamPoly):
        return x.divexact(ParamPoly.coerce(y))
    return x / y


def mat_mul(a, b):
    n, m = len(a), len(b[0])
    inner = len(b)
    assert inner == len(a[0])
    bt = [[b[i][j] for i in range(inner)] for j in range(m)]
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = None
            for x, y in zip(row, col):
                if x and y:
                    p = x * y
                    acc = p if acc is None else acc + p
            orow.append(acc if acc is not None else row[0] - row[0])
        out.append(orow)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if x and y:
                p = x * y
                acc = p if acc is None else acc + p
        out.append(acc if acc is not None else row[0] - row[0])
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def gauss_rank(mat) -> int:
    """Rank over a field by exact Gaussian elimination, first-nonzero pivots."""
    if not mat or not mat[0]:
        return 0
    m = [row[:] for row in mat]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pinv = 1 / pr[c] if not hasattr(pr[c], "inv") else pr[c].inv()
        for i in range(rank + 1, nrows):
            f = m[i][c]
            if not f:
                continue
            f = f * pinv
            row = m[i]
            for j in range(c, ncols):
                if pr[j]:
                    row[j] = row[j] - f * pr[j]
        rank += 1
        if rank == nrows:
            break
    return rank


def bareiss_rank(mat) -> int:
    """Rank over an integral domain, divisions kept exact (Bareiss)."""
    if not mat or not mat[0]:
        return 0
    m = [row[:] for row in mat]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = None
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, nrows):
            row, pr = m[i], m[rank]
            f = row[c]
            for j in range(c + 1, ncols):
                num = p * row[j] - f * pr[j]
                row[j] = _exact_div(num, prev) if prev is not None else num
            row[c] = f - f
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def independent_columns(mat) -> list[int]:
    """Indices of a maximal independent set of columns (field entries)."""
    if not mat or not mat[0]:
        return []
    m = [row[:] for row in mat]
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pinv = pr[c].inv()
        for i in range(r + 1, nrows):
            f = m[i][c]
            if not f:
                continue
            f = f * pinv
            row = m[i]
            for j in range(c, ncols):
                if pr[j]:
                    row[j] = row[j] - f * pr[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def is_symmetric(mat) -> bool:
    n = len(mat)
    return all(mat[i][j] == mat[j][i] for i in range(n) for j in range(i + 1, n))
