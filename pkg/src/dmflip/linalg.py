"""Dense linear algebra kernels on integer-encoded field elements.

All functions take plain lists of rows whose entries are the encodings of
:class:`~dmflip.field.FieldKind`.  Nothing here knows about labels.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .field import FieldKind

Rows = List[List[int]]


def copy_rows(m: Sequence[Sequence[int]]) -> Rows:
    return [list(r) for r in m]


def det(m: Sequence[Sequence[int]], kind: FieldKind) -> int:
    """Determinant by Gaussian elimination; the empty matrix has determinant 1."""
    n = len(m)
    a = copy_rows(m)
    add, mul, neg, inv = kind.add, kind.mul, kind.neg, kind.inv
    d = 1
    for c in range(n):
        p = c
        while p < n and not a[p][c]:
            p += 1
        if p == n:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = neg[d]
        row_c = a[c]
        piv = row_c[c]
        d = mul[d][piv]
        ip = inv[piv]
        for r in range(c + 1, n):
            row_r = a[r]
            f = row_r[c]
            if f:
                nf = neg[mul[f][ip]]
                mrow = mul[nf]
                for k in range(c, n):
                    row_r[k] = add[row_r[k]][mrow[row_c[k]]]
    return d


def inverse(m: Sequence[Sequence[int]], kind: FieldKind) -> Optional[Rows]:
    """Gauss-Jordan inverse, or ``None`` when ``m`` is singular."""
    n = len(m)
    add, mul, neg, inv = kind.add, kind.mul, kind.neg, kind.inv
    a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m)]
    width = 2 * n
    for c in range(n):
        p = c
        while p < n and not a[p][c]:
            p += 1
        if p == n:
            return None
        a[c], a[p] = a[p], a[c]
        ip = inv[a[c][c]]
        scale = mul[ip]
        a[c] = [scale[x] for x in a[c]]
        row_c = a[c]
        for r in range(n):
            if r == c:
                continue
            row_r = a[r]
            f = row_r[c]
            if f:
                mrow = mul[neg[f]]
                for k in range(c, width):
                    row_r[k] = add[row_r[k]][mrow[row_c[k]]]
    return [row[n:] for row in a]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], kind: FieldKind,
           inner: Optional[int] = None, cols: Optional[int] = None) -> Rows:
    """Product ``a @ b``; pass ``cols`` when ``b`` has no rows to read the width from."""
    add, mul = kind.add, kind.mul
    k = len(b) if inner is None else inner
    if cols is None:
        cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for t in range(k):
            x = row[t]
            if x:
                mrow = mul[x]
                brow = b[t]
                for j in range(cols):
                    acc[j] = add[acc[j]][mrow[brow[j]]]
        out.append(acc)
    return out


def rref(m: Sequence[Sequence[int]], kind: FieldKind, ncols: Optional[int] = None) -> Tuple[Rows, List[int]]:
    """Reduced row echelon form with zero rows dropped, plus the pivot columns.

    Pivots are chosen greedily left to right, so the pivot columns are the
    lexicographically first independent column set.
    """
    a = copy_rows(m)
    width = ncols if ncols is not None else (len(a[0]) if a else 0)
    add, mul, neg, inv = kind.add, kind.mul, kind.neg, kind.inv
    pivots: List[int] = []
    r = 0
    for c in range(width):
        p = r
        while p < len(a) and not a[p][c]:
            p += 1
        if p == len(a):
            continue
        a[r], a[p] = a[p], a[r]
        scale = mul[inv[a[r][c]]]
        a[r] = [scale[x] for x in a[r]]
        row_r = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                mrow = mul[neg[a[i][c]]]
                row_i = a[i]
                for k in range(c, width):
                    row_i[k] = add[row_i[k]][mrow[row_r[k]]]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(m: Sequence[Sequence[int]], kind: FieldKind, ncols: Optional[int] = None) -> int:
    return len(rref(m, kind, ncols)[1])


def nullspace(m: Sequence[Sequence[int]], kind: FieldKind, ncols: int) -> Rows:
    """Basis of ``{v : m v = 0}`` (not canonicalised)."""
    red, pivots = rref(m, kind, ncols)
    neg = kind.neg
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = neg[row[f]]
        basis.append(v)
    return basis
