"""Graded modules over ℤ with the trivial grading.

Here every degree ``M_n`` is an ℤ-submodule and a direct summand, so a
graded module is just a finite family of finitely generated abelian groups
indexed by degree.  Prime power decompositions always exist degree by
degree.  An elementary divisor decomposition ``⊕ Σ^{n_j} ℤ/(f_j)`` with
``f_1 | f_2 | ...`` needs a single divisibility chain across *all*
degrees, and can fail to exist: ``Σ^0 ℤ/2 ⊕ Σ^1 ℤ/3`` is the standard
example.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field

from .errors import InputError, OutOfScopeError

FACTOR_BOUND = 10**12


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InputError(f"integer matrix entries do not form a {self.rows}x{self.cols} array")
        for row in self.entries:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise InputError(f"integer matrix entry {x!r} is not an integer")

    @classmethod
    def from_rows(cls, rows, cols=None) -> IntegerMatrix:
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def diagonal(cls, values, rows=None) -> IntegerMatrix:
        rows = len(values) if rows is None else rows
        return cls.from_rows(
            [[values[j] if i == j else 0 for j in range(len(values))] for i in range(rows)],
            len(values),
        )

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj) -> IntegerMatrix:
        if isinstance(obj, list):
            return cls.from_rows(obj)
        if isinstance(obj, dict) and "rows" in obj:
            return cls(obj["rows"], obj.get("cols", 0), tuple(tuple(r) for r in obj.get("entries", [])))
        raise InputError(f"cannot read an integer matrix from {obj!r}")


@dataclass(frozen=True)
class TriviallyGradedModule:
    """``components[n]`` presents ``M_n`` as ``ℤ^rows / im A``."""

    components: dict

    def __post_init__(self):
        for n, A in self.components.items():
            if isinstance(n, bool) or not isinstance(n, int) or n < 0:
                raise InputError(f"degree {n!r} is not a natural number")
            if not isinstance(A, IntegerMatrix):
                raise InputError(f"component {n} is not an IntegerMatrix")

    @classmethod
    def from_cyclic(cls, summands) -> TriviallyGradedModule:
        """From ``(degree, order)`` pairs; order 0 stands for a copy of ℤ."""
        by_degree = defaultdict(list)
        for n, order in summands:
            by_degree[n].append(order)
        return cls({n: IntegerMatrix.diagonal(orders) for n, orders in sorted(by_degree.items())})

    def to_json(self):
        return {"ring": "Z", "components": {str(n): A.to_json() for n, A in sorted(self.components.items())}}

    @classmethod
    def from_json(cls, obj) -> TriviallyGradedModule:
        if not isinstance(obj, dict) or not isinstance(obj.get("components"), dict):
            raise InputError("ℤ-module JSON needs a 'components' object")
        if obj.get("ring", "Z") != "Z":
            raise InputError("only the ring Z is supported")
        comps = {}
        for key, value in obj["components"].items():
            try:
                n = int(key)
            except ValueError:
                raise InputError(f"component key {key!r} is not a degree") from None
            comps[n] = IntegerMatrix.from_json(value)
        return cls(comps)


@dataclass(frozen=True)
class PrimePowerSignature:
    torsion: tuple  # sorted (degree, prime, exponent)
    free_ranks: dict = dc_field(default_factory=dict)  # degree -> rank, nonzero only


@dataclass(frozen=True)
class GradedEDResult:
    exists: bool
    signature: tuple = ()  # (degree, divisor), divisor 0 for a free summand
    witness: tuple | None = None  # ((divisor, degree), (divisor, degree))


def integer_snf(A: IntegerMatrix):
    """Nonzero invariant factors of ``A``: positive, each dividing the next."""
    m = [list(r) for r in A.entries]
    rows, cols = A.rows, A.cols
    diag = []
    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                if m[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    dirty = True
            if not dirty:
                bad = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                m[t] = [a + b for a, b in zip(m[t], m[bad])]
                dirty = True
            # move the smallest remaining entry of row/column t onto the pivot
            cands = [(abs(m[i][t]), i, t) for i in range(t, rows) if m[i][t]]
            cands += [(abs(m[t][j]), t, j) for j in range(t, cols) if m[t][j]]
            _, i, j = min(cands)
            if i != t:
                m[t], m[i] = m[i], m[t]
            if j != t:
                for row in m:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    return tuple(diag)


def factorize(n: int) -> dict:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise InputError(f"cannot factor {n}")
    if n > FACTOR_BOUND:
        raise OutOfScopeError(f"{n} exceeds the factorization bound {FACTOR_BOUND}")
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariants(M: TriviallyGradedModule):
    """Per degree: (torsion invariant factors > 1, free rank)."""
    out = {}
    for n, A in sorted(M.components.items()):
        d = integer_snf(A)
        torsion = [x for x in d if x > 1]
        free = A.rows - len(d)
        for x in torsion:
            if x > FACTOR_BOUND:
                raise OutOfScopeError(f"{x} exceeds the factorization bound {FACTOR_BOUND}")
        out[n] = (torsion, free)
    return out


def prime_power_decomposition(M: TriviallyGradedModule) -> PrimePowerSignature:
    torsion = []
    free = {}
    for n, (factors, rank) in _invariants(M).items():
        for d in factors:
            torsion.extend((n, p, k) for p, k in factorize(d).items())
        if rank:
            free[n] = rank
    return PrimePowerSignature(tuple(sorted(torsion)), free)


def graded_elementary_divisor_decomposition(M: TriviallyGradedModule) -> GradedEDResult:
    """Decide whether ``M`` is a graded ``⊕ Σ^{n_j} ℤ/(f_j)`` with ``f_1 | f_2 | ...``.

    Each summand sits in a single degree, so the summands in degree ``n``
    must be the invariant factors of ``M_n``.  Free summands (``f = 0``) can
    always go last.  What remains is whether all torsion invariant factors
    of all degrees form one chain.
    """
    inv = _invariants(M)
    torsion = sorted((d, n) for n, (factors, _) in inv.items() for d in factors)
    for (a, na), (b, nb) in zip(torsion, torsion[1:]):
        if b % a:
            return GradedEDResult(False, witness=((a, na), (b, nb)))
    free = [(n, 0) for n, (_, rank) in inv.items() for _ in range(rank)]
    return GradedEDResult(True, tuple((n, d) for d, n in torsion) + tuple(free))


def ungraded_elementary_divisors(M: TriviallyGradedModule):
    """Invariant factors of the underlying abelian group, free part as trailing zeros."""
    powers = defaultdict(list)
    free = 0
    for factors, rank in _invariants(M).values():
        free += rank
        for d in factors:
            for p, k in factorize(d).items():
                powers[p].append(p**k)
    length = max((len(v) for v in powers.values()), default=0)
    chain = [1] * length
    for v in powers.values():
        v.sort(reverse=True)
        for i, q in enumerate(v):
            chain[length - 1 - i] *= q
    return tuple(chain) + (0,) * free

