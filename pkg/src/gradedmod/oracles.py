"""Degreewise dimensions of ``F / im A`` by plain linear algebra over K.

Nothing here touches :mod:`gradedmod.reduction`.  In degree ``d`` the
map ``A`` restricts to the K-linear map from ``span{T^(d-m_k) e_k : m_k <= d}``
to ``span{T^(d-n_j) g_j : n_j <= d}`` whose matrix holds the coefficient
of ``A_jk``.  Its cokernel dimension is the Hilbert function.

Also a brute-force existence check for graded elementary divisor
decompositions over the trivially graded ℤ.
"""

from __future__ import annotations

from . import linalg
from .graded_matrix import GradedMatrix


def degree_map(A: GradedMatrix, d: int):
    """The K-matrix of ``A`` in degree ``d`` (rows: generators, cols: relations)."""
    rows = [j for j, n in enumerate(A.row_degrees) if n <= d]
    cols = [k for k, m in enumerate(A.col_degrees) if m <= d]
    z = A.field.zero
    return [[A.entries[j][k].coeff if A.entries[j][k] else z for k in cols] for j in rows], len(cols)


def cokernel_dim(A: GradedMatrix, d: int) -> int:
    matrix, ncols = degree_map(A, d)
    return len(matrix) - linalg.rank(matrix, ncols)


def hilbert_function(A: GradedMatrix, top: int | None = None):
    """``[dim_K (F / im A)_d for d in 0..top]``.

    The default ``top`` is ``max(m) + max(n) + 1``, past which the function
    is constant.
    """
    if top is None:
        top = max(A.col_degrees, default=0) + max(A.row_degrees, default=0) + 1
    return [cokernel_dim(A, d) for d in range(top + 1)]


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def ed_exists_by_partition_search(prime_powers) -> bool:
    """Brute force over ways of grouping prime powers into cyclic summands.

    ``prime_powers`` are ``(degree, p, k)`` triples.  A group is one cyclic
    summand ``Σ^n ℤ/(∏ p^k)`` when all its members share the degree ``n``
    and have distinct primes.  Returns True when some grouping yields a
    family of orders that divide one another in a chain.
    """
    items = list(prime_powers)
    for part in _set_partitions(items):
        orders = []
        for group in part:
            degrees = {n for n, _, _ in group}
            primes = [p for _, p, _ in group]
            if len(degrees) != 1 or len(set(primes)) != len(primes):
                break
            order = 1
            for _, p, k in group:
                order *= p**k
            orders.append(order)
        else:
            orders.sort()
            if all(b % a == 0 for a, b in zip(orders, orders[1:])):
                return True
    return False
