'''
Gaussian elimination over a FieldDesc on square or rectangular arrays of raw values.
'''

from typing import List, Optional

from .field import FieldDesc

def _copy(rows) -> List[list]:
    return [list(r) for r in rows]

def rank(field: FieldDesc, rows) -> int:
    m = _copy(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col] != field._zero), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field._inv(m[r][col])
        m[r] = [field._mul(inv, v) for v in m[r]]
        for i in range(r + 1, nrows):
            c = m[i][col]
            if c != field._zero:
                m[i] = [field._sub(a, field._mul(c, b)) for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r

def determinant(field: FieldDesc, rows):
    m = _copy(rows)
    n = len(m)
    det = field._one
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != field._zero), None)
        if pivot is None:
            return field._zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = field._neg(det)
        det = field._mul(det, m[col][col])
        inv = field._inv(m[col][col])
        for i in range(col + 1, n):
            c = field._mul(m[i][col], inv)
            if c != field._zero:
                m[i] = [field._sub(a, field._mul(c, b)) for a, b in zip(m[i], m[col])]
    return det

def inverse(field: FieldDesc, rows) -> Optional[List[list]]:
    '''Gauss-Jordan inverse, None when singular'''
    n = len(rows)
    m = [list(r) + [field._one if i == j else field._zero for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != field._zero), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = field._inv(m[col][col])
        m[col] = [field._mul(inv, v) for v in m[col]]
        for i in range(n):
            if i == col:
                continue
            c = m[i][col]
            if c != field._zero:
                m[i] = [field._sub(a, field._mul(c, b)) for a, b in zip(m[i], m[col])]
    return [row[n:] for row in m]

def matmul(field: FieldDesc, a, b) -> List[list]:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = field._zero
            for t in range(k):
                x = a[i][t]
                if x != field._zero:
                    acc = field._add(acc, field._mul(x, b[t][j]))
            row.append(acc)
        out.append(row)
    return out
