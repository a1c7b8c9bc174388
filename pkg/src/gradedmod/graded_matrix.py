"""Graded matrices over K[T].

A matrix ``A`` with row degrees ``n_1 <= ... <= n_r`` and column degrees
``m_1 <= ... <= m_s`` is graded when every entry is a homogeneous term and
each nonzero entry satisfies ``m_k = n_j + deg A_jk``.  It represents a
graded map ``⊕_k Σ^{m_k} K[T] -> ⊕_j Σ^{n_j} K[T]``.

Row and column indices in this module's public API are 1-based, so that
``low`` can return 0 for a zero column.
"""

from __future__ import annotations

from .errors import DegreeOrderError, GradednessError, InputError, UsageError
from .field import FieldSpec, parse_field
from .graded_poly import HomogeneousTerm


def _check_degrees(degrees, what):
    degrees = tuple(degrees)
    for d in degrees:
        if isinstance(d, bool) or not isinstance(d, int) or d < 0:
            raise DegreeOrderError(f"{what} must be natural numbers, got {d!r}")
    for a, b in zip(degrees, degrees[1:]):
        if b < a:
            raise DegreeOrderError(f"{what} are not monotonically increasing: {list(degrees)}")
    return degrees


class GradedMatrix:
    """A validated graded matrix; see the module docstring for the law."""

    __slots__ = ("field", "row_degrees", "col_degrees", "entries")

    def __init__(self, field: FieldSpec, row_degrees, col_degrees, entries=None):
        self.field = field
        self.row_degrees = _check_degrees(row_degrees, "row degrees")
        self.col_degrees = _check_degrees(col_degrees, "column degrees")
        r, s = len(self.row_degrees), len(self.col_degrees)
        if entries is None:
            z = HomogeneousTerm.zero(field)
            entries = [[z] * s for _ in range(r)]
        else:
            entries = [list(row) for row in entries]
            if len(entries) != r or any(len(row) != s for row in entries):
                raise InputError(f"entries do not form a {r}x{s} array")
        self.entries = entries
        for k in range(s):
            self._validate_column(k)

    def _validate_column(self, k):
        m = self.col_degrees[k]
        for j, n in enumerate(self.row_degrees):
            a = self.entries[j][k]
            if not isinstance(a, HomogeneousTerm) or a.field != self.field:
                raise InputError(f"entry ({j + 1},{k + 1}) is not a homogeneous term over {self.field}")
            if a and m != n + a.degree:
                raise GradednessError(
                    j + 1, k + 1,
                    f"gradedness violated at entry ({j + 1},{k + 1}): "
                    f"column degree {m} != row degree {n} + entry degree {a.degree}",
                )

    def _validate_row(self, j):
        n = self.row_degrees[j]
        for k, m in enumerate(self.col_degrees):
            a = self.entries[j][k]
            if a and m != n + a.degree:
                raise GradednessError(j + 1, k + 1)

    @property
    def shape(self):
        return len(self.row_degrees), len(self.col_degrees)

    @property
    def nrows(self):
        return len(self.row_degrees)

    @property
    def ncols(self):
        return len(self.col_degrees)

    def copy(self) -> GradedMatrix:
        new = object.__new__(GradedMatrix)
        new.field = self.field
        new.row_degrees = self.row_degrees
        new.col_degrees = self.col_degrees
        new.entries = [list(row) for row in self.entries]
        return new

    @classmethod
    def identity(cls, field: FieldSpec, degrees) -> GradedMatrix:
        m = cls(field, degrees, degrees)
        one = HomogeneousTerm(field.one, 0)
        for i in range(len(m.row_degrees)):
            m.entries[i][i] = one
        return m

    @classmethod
    def from_sparse(cls, field, row_degrees, col_degrees, triples) -> GradedMatrix:
        """Build from ``(j, k, coeff, degree)`` with 1-based ``j, k``."""
        m = cls(field, row_degrees, col_degrees)
        r, s = m.shape
        for j, k, coeff, degree in triples:
            if not (1 <= j <= r and 1 <= k <= s):
                raise InputError(f"entry index ({j},{k}) outside a {r}x{s} matrix")
            m.entries[j - 1][k - 1] = HomogeneousTerm(field(coeff), degree)
        for k in range(s):
            m._validate_column(k)
        return m

    def entry(self, j, k) -> HomogeneousTerm:
        return self.entries[j - 1][k - 1]

    def column(self, k):
        return [row[k - 1] for row in self.entries]

    def low(self, k) -> int:
        """Index of the last nonzero entry of column ``k``; 0 if there is none."""
        if not 1 <= k <= self.ncols:
            raise UsageError(f"column {k} out of range 1..{self.ncols}")
        c = k - 1
        for j in range(self.nrows, 0, -1):
            if self.entries[j - 1][c]:
                return j
        return 0

    def lows(self):
        return [self.low(k) for k in range(1, self.ncols + 1)]

    def is_reduced(self) -> bool:
        nonzero = [l for l in self.lows() if l]
        return len(nonzero) == len(set(nonzero))

    def subtract_column_multiple(self, k, source, factor: HomogeneousTerm) -> None:
        """In place: column ``k`` -= ``factor`` * column ``source``."""
        if k == source:
            raise UsageError("column operation needs two distinct columns")
        for idx in (k, source):
            if not 1 <= idx <= self.ncols:
                raise UsageError(f"column {idx} out of range 1..{self.ncols}")
        if not factor:
            return
        if factor.field != self.field:
            raise UsageError("factor lives in a different field")
        want = self.col_degrees[k - 1] - self.col_degrees[source - 1]
        if factor.degree != want:
            raise GradednessError(
                0, k, f"column factor of degree {factor.degree} breaks gradedness of column {k} (needs {want})"
            )
        t, s = k - 1, source - 1
        for row in self.entries:
            if row[s]:
                row[t] = row[t] - factor * row[s]
        self._validate_column(t)

    def subtract_row_multiple(self, j, source, factor: HomogeneousTerm) -> None:
        """In place: row ``j`` -= ``factor`` * row ``source``."""
        if j == source:
            raise UsageError("row operation needs two distinct rows")
        for idx in (j, source):
            if not 1 <= idx <= self.nrows:
                raise UsageError(f"row {idx} out of range 1..{self.nrows}")
        if not factor:
            return
        if factor.field != self.field:
            raise UsageError("factor lives in a different field")
        want = self.row_degrees[source - 1] - self.row_degrees[j - 1]
        if factor.degree != want:
            raise GradednessError(
                j, 0, f"row factor of degree {factor.degree} breaks gradedness of row {j} (needs {want})"
            )
        target, src = self.entries[j - 1], self.entries[source - 1]
        for c, a in enumerate(src):
            if a:
                target[c] = target[c] - factor * a
        self._validate_row(j - 1)

    def scale_column(self, k, unit) -> None:
        unit = self.field(unit)
        if not unit:
            raise UsageError("scaling by zero is not invertible")
        u = HomogeneousTerm(unit, 0)
        for row in self.entries:
            row[k - 1] = u * row[k - 1]

    def scale_row(self, j, unit) -> None:
        unit = self.field(unit)
        if not unit:
            raise UsageError("scaling by zero is not invertible")
        u = HomogeneousTerm(unit, 0)
        self.entries[j - 1] = [u * a for a in self.entries[j - 1]]

    def swap_columns(self, k, k2) -> None:
        if self.col_degrees[k - 1] != self.col_degrees[k2 - 1]:
            raise DegreeOrderError("only columns of equal degree can be swapped")
        for row in self.entries:
            row[k - 1], row[k2 - 1] = row[k2 - 1], row[k - 1]

    def swap_rows(self, j, j2) -> None:
        if self.row_degrees[j - 1] != self.row_degrees[j2 - 1]:
            raise DegreeOrderError("only rows of equal degree can be swapped")
        e = self.entries
        e[j - 1], e[j2 - 1] = e[j2 - 1], e[j - 1]

    def __matmul__(self, other: GradedMatrix) -> GradedMatrix:
        if self.col_degrees != other.row_degrees:
            raise UsageError("inner degree vectors differ; the product is not a graded matrix")
        out = GradedMatrix(self.field, self.row_degrees, other.col_degrees)
        for i, arow in enumerate(self.entries):
            orow = out.entries[i]
            for t, a in enumerate(arow):
                if not a:
                    continue
                for k, b in enumerate(other.entries[t]):
                    if b:
                        orow[k] = orow[k] + a * b
        for k in range(out.ncols):
            out._validate_column(k)
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.row_degrees == other.row_degrees
            and self.col_degrees == other.col_degrees
            and self.entries == other.entries
        )

    def __repr__(self):
        rows = "; ".join(", ".join(map(repr, row)) for row in self.entries)
        return f"GradedMatrix({self.field}, n={list(self.row_degrees)}, m={list(self.col_degrees)}, [{rows}])"

    def to_json(self) -> dict:
        out = dict(self.field.to_json())
        out["row_degrees"] = list(self.row_degrees)
        out["col_degrees"] = list(self.col_degrees)
        out["entries"] = [
            [j + 1, k + 1, str(a.coeff), a.degree]
            for j, row in enumerate(self.entries)
            for k, a in enumerate(row)
            if a
        ]
        return out

    @classmethod
    def from_json(cls, obj, field: FieldSpec | None = None) -> GradedMatrix:
        if not isinstance(obj, dict):
            raise InputError("graded matrix JSON must be an object")
        for key in ("row_degrees", "col_degrees"):
            if not isinstance(obj.get(key), list):
                raise InputError(f"graded matrix JSON needs a list {key!r}")
        field = field or parse_field(obj)
        triples = []
        for item in obj.get("entries", []):
            if not isinstance(item, list) or len(item) != 4:
                raise InputError(f"entry must be [j, k, coeff, deg], got {item!r}")
            j, k, coeff, deg = item
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (j, k, deg)) or deg < 0:
                raise InputError(f"entry must be [j, k, coeff, deg], got {item!r}")
            triples.append((j, k, coeff if isinstance(coeff, str) else _coeff_value(coeff), deg))
        return cls.from_sparse(field, obj["row_degrees"], obj["col_degrees"], triples)


def _coeff_value(coeff):
    if isinstance(coeff, bool) or not isinstance(coeff, int):
        raise InputError(f"coefficient must be an integer or a string, got {coeff!r}")
    return coeff


def validate(field, row_degrees, col_degrees, entries) -> GradedMatrix:
    return GradedMatrix(field, row_degrees, col_degrees, entries)


def low(A: GradedMatrix, k: int) -> int:
    return A.low(k)


def is_reduced(A: GradedMatrix) -> bool:
    return A.is_reduced()


def column_axpy(A: GradedMatrix, k: int, source: int, factor: HomogeneousTerm) -> GradedMatrix:
    out = A.copy()
    out.subtract_column_multiple(k, source, factor)
    return out


def row_axpy(A: GradedMatrix, j: int, source: int, factor: HomogeneousTerm) -> GradedMatrix:
    out = A.copy()
    out.subtract_row_multiple(j, source, factor)
    return out


def canonical_from_scaled(field, row_degrees, col_degrees, entries, t_degree: int) -> GradedMatrix:
    """Rewrite a matrix over K[T] with ``deg T = t_degree`` in the canonical grading.

    ``entries`` hold terms whose ``degree`` is the exponent of ``T``, so the
    law reads ``m_k = n_j + t_degree * e``.  All row and column degrees must
    be multiples of ``t_degree``; dividing them out gives a matrix graded in
    the usual sense with the same entries.
    """
    if t_degree < 1:
        raise UsageError("the degree of T must be positive")
    for d in tuple(row_degrees) + tuple(col_degrees):
        if d % t_degree:
            raise UsageError(f"degree {d} is not a multiple of deg T = {t_degree}")
    return GradedMatrix(
        field,
        [d // t_degree for d in row_degrees],
        [d // t_degree for d in col_degrees],
        entries,
    )
