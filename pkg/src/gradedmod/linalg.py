"""Dense linear algebra over a :class:`~gradedmod.field.FieldSpec`.

Matrices are lists of rows of :class:`~gradedmod.field.FieldElement`.  A
matrix with no rows still has a width, so functions that need it take
``ncols`` explicitly.
"""

from __future__ import annotations

from .errors import InputError


def zeros(field, nrows, ncols):
    z = field.zero
    return [[z] * ncols for _ in range(nrows)]


def identity(field, n):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def transpose(rows, ncols):
    return [[row[j] for row in rows] for j in range(ncols)]


def matmul(a, b, field, inner, ncols):
    """``a`` is ``len(a) x inner``, ``b`` is ``inner x ncols``."""
    out = zeros(field, len(a), ncols)
    for i, arow in enumerate(a):
        orow = out[i]
        for t in range(inner):
            x = arow[t]
            if not x:
                continue
            brow = b[t]
            for j in range(ncols):
                if brow[j]:
                    orow[j] = orow[j] + x * brow[j]
    return out


def rref(rows, ncols):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` is a new list of rows and
    ``pivots[i]`` is the pivot column of row ``i``.  Zero rows are dropped.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inv()
        prow = m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                m[i] = [x - f * y if y else x for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols, field):
    """Basis of ``{x : A x = 0}`` in the standard deterministic form.

    One basis vector per free column, with a 1 in that column.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pc in zip(reduced, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(columns, target, field):
    """Coefficients ``x`` with ``sum(x[i] * columns[i]) == target``.

    ``columns`` must be linearly independent.  Raises :class:`InputError`
    when ``target`` is not in their span.
    """
    n = len(target)
    k = len(columns)
    aug = [[columns[i][t] for i in range(k)] + [target[t]] for t in range(n)]
    reduced, pivots = rref(aug, k + 1)
    if pivots and pivots[-1] == k:
        raise InputError("vector is not in the span")
    if len(pivots) != k:
        raise InputError("columns are linearly dependent")
    x = [field.zero] * k
    for row, pc in zip(reduced, pivots):
        x[pc] = row[k]
    return x


def independent_subset(vectors, length):
    """Greedy left-to-right maximal linearly independent subset."""
    chosen = []
    echelon = []  # (pivot, normalized row) pairs, fully reduced against each other
    for v in vectors:
        w = list(v)
        for pc, row in echelon:
            if w[pc]:
                f = w[pc]
                w = [x - f * y if y else x for x, y in zip(w, row)]
        pc = next((i for i in range(length) if w[i]), None)
        if pc is None:
            continue
        inv = w[pc].inv()
        w = [x * inv for x in w]
        echelon = [(p, [x - r[pc] * y if y else x for x, y in zip(r, w)] if r[pc] else r) for p, r in echelon]
        echelon.append((pc, w))
        chosen.append(v)
    return chosen
