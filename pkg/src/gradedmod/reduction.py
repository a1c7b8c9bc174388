"""Homogeneous matrix reduction and what can be read off a reduced matrix.

:func:`reduce` is the left-to-right column reduction used for persistent
homology, phrased for graded matrices over K[T].  For column ``k`` it
walks ``j`` from the column's initial low index down to 1 and, whenever
``A_jk != 0`` and an earlier column has low index ``j``, subtracts
``A_jk / A_jk'`` times that column.  Gradedness makes the quotient a
homogeneous term, so the matrix stays graded throughout.  The entry
removed by each such step is ``A_jk`` in the target column.

Once reduced, ``F / im A`` splits as

    ⊕_{j = low(k)} Σ^{n_j} K[T]/(T^{m_k - n_j})  ⊕  ⊕_{j not a low} Σ^{n_j} K[T]

which is :func:`quotient_signature`.  See ``docs/reduction.md`` for why a
single pass always suffices.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import InvariantError, UsageError
from .field import FieldSpec
from .graded_matrix import GradedMatrix
from .graded_poly import INF, GradedSignature, HomogeneousTerm

MINOR_GUARD = 6


@dataclass
class ReductionResult:
    reduced: GradedMatrix
    transform: GradedMatrix
    low_map: dict  # column -> row, 1-based, nonzero lows only
    column_ops: int = 0
    passes: int = 1


@dataclass(frozen=True)
class SmithNormalForm:
    diagonal: tuple  # monic HomogeneousTerms, degrees non-decreasing
    rank: int

    @property
    def degrees(self):
        return [d.degree for d in self.diagonal]


def _reduction_pass(A: GradedMatrix, B: GradedMatrix):
    """One left-to-right pass, in place on ``A`` and ``B``.  Returns the op count."""
    ops = 0
    pivot_col = {}  # row j -> the earlier column whose low is j
    for k in range(1, A.ncols + 1):
        ell = A.low(k)
        if ell:
            c = k - 1
            for j in range(ell, 0, -1):
                a = A.entries[j - 1][c]
                if not a:
                    continue
                kp = pivot_col.get(j)
                if kp is None:
                    continue
                factor = a / A.entries[j - 1][kp - 1]
                A.subtract_column_multiple(k, kp, factor)
                B.subtract_column_multiple(k, kp, factor)
                ops += 1
        final = A.low(k)
        if final:
            if final in pivot_col:
                raise InvariantError(f"columns {pivot_col[final]} and {k} share low index {final}")
            pivot_col[final] = k
    return ops


def reduce(A: GradedMatrix) -> ReductionResult:
    """Reduce ``A`` by homogeneous column operations (no swaps).

    Returns ``A' = A @ B`` and the transform ``B``, which is unit upper
    triangular.  The pass is repeated if the result is not reduced; that
    never happens, and ``passes`` records it so tests can check.
    """
    work = A.copy()
    B = GradedMatrix.identity(A.field, A.col_degrees)
    ops = _reduction_pass(work, B)
    passes = 1
    while not work.is_reduced():
        ops += _reduction_pass(work, B)
        passes += 1
    low_map = {k: l for k, l in enumerate(work.lows(), start=1) if l}
    return ReductionResult(work, B, low_map, ops, passes)


def _require_reduced(A: GradedMatrix):
    if not A.is_reduced():
        raise UsageError("matrix is not reduced; call reduce() first")


def quotient_signature(reduced: GradedMatrix) -> GradedSignature:
    """Signature of ``F / im A'`` for a reduced graded matrix ``A'``."""
    _require_reduced(reduced)
    n, m = reduced.row_degrees, reduced.col_degrees
    paired = {l: k for k, l in enumerate(reduced.lows(), start=1) if l}
    summands = []
    for j in range(1, reduced.nrows + 1):
        k = paired.get(j)
        if k is None:
            summands.append((n[j - 1], INF))
        else:
            exponent = m[k - 1] - n[j - 1]
            if exponent:
                summands.append((n[j - 1], exponent))
    return GradedSignature(summands)


def to_smith_normal_form(reduced: GradedMatrix, return_matrix=False):
    """Clear everything above each low entry by graded row operations.

    What remains has one monomial per nonzero column, so after permuting
    rows and columns it is diagonal; those monomials, made monic and sorted
    by degree, are the Smith normal form.
    """
    _require_reduced(reduced)
    A = reduced.copy()
    for k in range(1, A.ncols + 1):
        ell = A.low(k)
        if not ell:
            continue
        pivot = A.entry(ell, k)
        for j in range(ell - 1, 0, -1):
            a = A.entry(j, k)
            if a:
                A.subtract_row_multiple(j, ell, a / pivot)
    diagonal = []
    for k in range(1, A.ncols + 1):
        nonzero = [j for j in range(1, A.nrows + 1) if A.entry(j, k)]
        if len(nonzero) > 1:
            raise InvariantError(f"column {k} still has {len(nonzero)} nonzero entries")
        if nonzero:
            diagonal.append(A.entry(nonzero[0], k).normalized())
    diagonal.sort(key=lambda t: t.degree)
    snf = SmithNormalForm(tuple(diagonal), len(diagonal))
    return (snf, A) if return_matrix else snf


def low_entry_divisors(reduced: GradedMatrix) -> SmithNormalForm:
    """Sorted monic low entries of a reduced matrix, without any row work."""
    _require_reduced(reduced)
    terms = [reduced.entry(l, k).normalized() for k, l in enumerate(reduced.lows(), start=1) if l]
    terms.sort(key=lambda t: t.degree)
    return SmithNormalForm(tuple(terms), len(terms))


# -- independent oracle: determinantal divisors ------------------------------


def _determinant(rows, field):
    """Leibniz expansion over K[T]; returns ``{degree: coeff}`` with zeros removed."""
    n = len(rows)
    poly = {}
    for perm in itertools.permutations(range(n)):
        term_coeff = field.one
        degree = 0
        for i, p in enumerate(perm):
            a = rows[i][p]
            if not a:
                break
            term_coeff = term_coeff * a.coeff
            degree += a.degree
        else:
            if _parity(perm):
                term_coeff = -term_coeff
            poly[degree] = poly.get(degree, field.zero) + term_coeff
    return {d: c for d, c in poly.items() if c}


def _parity(perm):
    seen = [False] * len(perm)
    odd = False
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        odd ^= length % 2 == 0
    return odd


def determinant(A: GradedMatrix) -> dict:
    """Determinant of a square graded matrix as ``{degree: coeff}``."""
    if A.nrows != A.ncols:
        raise UsageError("determinant of a non-square matrix")
    return _determinant(A.entries, A.field)


def elementary_divisors_by_minors(A: GradedMatrix) -> SmithNormalForm:
    """Elementary divisors from gcds of ``i x i`` minors.

    Minors of a graded matrix are homogeneous, so each gcd is a power of
    ``T``: the smallest degree among the nonzero minors.
    """
    r, s = A.shape
    if r > MINOR_GUARD or s > MINOR_GUARD:
        raise UsageError(f"minor expansion is limited to {MINOR_GUARD}x{MINOR_GUARD} matrices")
    gcd_degrees = [0]
    for i in range(1, min(r, s) + 1):
        best = None
        for rows in itertools.combinations(range(r), i):
            for cols in itertools.combinations(range(s), i):
                sub = [[A.entries[a][b] for b in cols] for a in rows]
                det = _determinant(sub, A.field)
                if not det:
                    continue
                if len(det) != 1:
                    raise InvariantError(f"minor {rows}x{cols} of a graded matrix is not homogeneous")
                (d,) = det
                best = d if best is None else min(best, d)
        if best is None:
            break
        gcd_degrees.append(best)
    one = A.field.one
    diagonal = tuple(
        HomogeneousTerm(one, gcd_degrees[i] - gcd_degrees[i - 1]) for i in range(1, len(gcd_degrees))
    )
    return SmithNormalForm(diagonal, len(diagonal))


# -- random instances and the invariance check -------------------------------


def random_graded_matrix(field: FieldSpec, rng: random.Random, max_rows=8, max_cols=8,
                         max_degree=10, density=0.5, min_rows=0, min_cols=0) -> GradedMatrix:
    r = rng.randint(min_rows, max_rows)
    s = rng.randint(min_cols, max_cols)
    n = sorted(rng.randint(0, max_degree) for _ in range(r))
    # relations at or above the lowest generator, so most positions are admissible
    m = sorted(rng.randint(n[0] if n else 0, max_degree) for _ in range(s))
    A = GradedMatrix(field, n, m)
    for j in range(r):
        for k in range(s):
            if m[k] >= n[j] and rng.random() < density:
                A.entries[j][k] = HomogeneousTerm(field.random_element(rng, nonzero=True), m[k] - n[j])
    return A


def random_basis_change(A: GradedMatrix, rng: random.Random) -> None:
    """Apply one random invertible graded column operation and one row operation, in place."""
    field = A.field
    r, s = A.shape
    if s:
        k = rng.randint(1, s)
        choice = rng.random()
        partners = [kp for kp in range(1, s + 1) if kp != k and A.col_degrees[kp - 1] <= A.col_degrees[k - 1]]
        if choice < 0.6 and partners:
            kp = rng.choice(partners)
            deg = A.col_degrees[k - 1] - A.col_degrees[kp - 1]
            A.subtract_column_multiple(k, kp, HomogeneousTerm(field.random_element(rng, nonzero=True), deg))
        elif choice < 0.8:
            same = [kp for kp in partners if A.col_degrees[kp - 1] == A.col_degrees[k - 1]]
            if same:
                A.swap_columns(k, rng.choice(same))
        else:
            A.scale_column(k, field.random_element(rng, nonzero=True))
    if r:
        j = rng.randint(1, r)
        choice = rng.random()
        partners = [jp for jp in range(1, r + 1) if jp != j and A.row_degrees[jp - 1] >= A.row_degrees[j - 1]]
        if choice < 0.6 and partners:
            jp = rng.choice(partners)
            deg = A.row_degrees[jp - 1] - A.row_degrees[j - 1]
            A.subtract_row_multiple(j, jp, HomogeneousTerm(field.random_element(rng, nonzero=True), deg))
        elif choice < 0.8:
            same = [jp for jp in partners if A.row_degrees[jp - 1] == A.row_degrees[j - 1]]
            if same:
                A.swap_rows(j, rng.choice(same))
        else:
            A.scale_row(j, field.random_element(rng, nonzero=True))


def verify_signature_uniqueness(A: GradedMatrix, trials: int, rng_seed=0) -> bool:
    """Check that random graded changes of basis never change the signature.

    Basis changes accumulate: trial ``t`` reduces the matrix after ``t``
    random column and row operations.
    """
    rng = random.Random(rng_seed)
    expected = quotient_signature(reduce(A).reduced)
    work = A.copy()
    for _ in range(trials):
        random_basis_change(work, rng)
        if quotient_signature(reduce(work).reduced) != expected:
            return False
    return True
