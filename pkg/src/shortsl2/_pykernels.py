"""Pure-Python versions of the hot loops.

The compiled module ``_ckernels`` exposes the same two functions with the
same return values; ``_backend`` picks one at import time.
"""
from math import gcd


def _content(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan on integer rows.

    Returns ``(out, pivots)`` where each ``out[i]`` is an integer row whose
    pivot entry is positive and which is zero in every other pivot column.
    Dividing a row by its pivot entry gives the reduced row echelon form.
    """
    work = [list(r) for r in rows if any(r)]
    pivots = []
    top = 0
    for col in range(ncols):
        if top == len(work):
            break
        sel = -1
        for i in range(top, len(work)):
            if work[i][col]:
                sel = i
                break
        if sel < 0:
            continue
        work[top], work[sel] = work[sel], work[top]
        prow = work[top]
        p = prow[col]
        for i in range(len(work)):
            if i == top:
                continue
            row = work[i]
            c = row[col]
            if not c:
                continue
            g = gcd(p, c)
            a = p // g
            b = c // g
            for k in range(ncols):
                row[k] = a * row[k] - b * prow[k]
            g = _content(row)
            if g > 1:
                for k in range(ncols):
                    row[k] //= g
        pivots.append(col)
        top += 1
    out = work[:top]
    for i, col in enumerate(pivots):
        row = out[i]
        if row[col] < 0:
            for k in range(ncols):
                row[k] = -row[k]
        g = _content(row)
        if g > 1:
            for k in range(ncols):
                row[k] //= g
    return out, pivots


def jacobi_residuals(n, parities, table):
    """Super Jacobi residuals on all basis triples.

    ``table`` maps ``(i, j)`` to a list of ``(k, c)`` pairs with integer ``c``
    (the caller scales the constants to a common denominator).  Returns a
    list of ``(i, j, k, {index: value})`` for every triple with a nonzero
    residual, in lexicographic order.
    """
    def br(x, y):
        return table.get((x, y), ())

    out = []
    for i in range(n):
        pi = parities[i]
        for j in range(n):
            pj = parities[j]
            for k in range(n):
                pk = parities[k]
                acc = {}
                s2 = -1 if (pi * (pj + pk)) & 1 else 1
                s3 = -1 if (pk * (pi + pj)) & 1 else 1
                for t, c in br(i, j):
                    for u, d in br(t, k):
                        acc[u] = acc.get(u, 0) + c * d
                for t, c in br(j, k):
                    for u, d in br(t, i):
                        acc[u] = acc.get(u, 0) + s2 * c * d
                for t, c in br(k, i):
                    for u, d in br(t, j):
                        acc[u] = acc.get(u, 0) + s3 * c * d
                res = {u: v for u, v in acc.items() if v}
                if res:
                    out.append((i, j, k, dict(sorted(res.items()))))
    return out
