"""Graded presentations ``F / im A`` and persistence modules.

A persistence module ``M^0 -> M^1 -> ... -> M^L`` is stored as its finite
prefix; past ``L`` every map is the identity of ``M^L``.  As a graded
K[T]-module it is generated by the bases of the ``M^n`` placed in degree
``n``, subject to ``T g - f^n(g)`` for every basis vector ``g`` of ``M^n``
with ``n < L``.  The top level gets no relations: the free summands on its
generators are exactly the constant tail.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import InputError
from .field import FieldSpec, parse_field
from .graded_matrix import GradedMatrix
from .graded_poly import GradedSignature, HomogeneousTerm
from .reduction import quotient_signature, reduce


@dataclass(frozen=True)
class GradedPresentation:
    field: FieldSpec
    matrix: GradedMatrix

    def __post_init__(self):
        if self.matrix.field != self.field:
            raise InputError("presentation matrix lives over a different field")

    @property
    def gen_degrees(self):
        return self.matrix.row_degrees

    @property
    def rel_degrees(self):
        return self.matrix.col_degrees

    @classmethod
    def from_matrix(cls, matrix: GradedMatrix) -> GradedPresentation:
        return cls(matrix.field, matrix)

    def to_json(self):
        return self.matrix.to_json()

    @classmethod
    def from_json(cls, obj, field=None) -> GradedPresentation:
        return cls.from_matrix(GradedMatrix.from_json(obj, field))


class PersistenceModule:
    """Finite-type persistence module given by ``dims`` and ``maps``.

    ``maps[n]`` is a ``dims[n+1] x dims[n]`` list of rows of field elements.
    """

    def __init__(self, field: FieldSpec, dims, maps):
        self.field = field
        self.dims = tuple(dims)
        if not self.dims:
            raise InputError("a persistence module needs at least one level")
        for d in self.dims:
            if isinstance(d, bool) or not isinstance(d, int) or d < 0:
                raise InputError(f"dimensions must be natural numbers, got {d!r}")
        if len(maps) != len(self.dims) - 1:
            raise InputError(f"expected {len(self.dims) - 1} maps for {len(self.dims)} levels, got {len(maps)}")
        self.maps = []
        for n, f in enumerate(maps):
            rows, cols = self.dims[n + 1], self.dims[n]
            if len(f) != rows or any(len(row) != cols for row in f):
                raise InputError(f"map f^{n} must be {rows}x{cols}")
            self.maps.append([[field(x) for x in row] for row in f])

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def dim(self, n: int) -> int:
        return self.dims[min(n, self.top)]

    def composite(self, a: int, b: int):
        """Matrix of ``M^a -> M^b`` for ``a <= b``."""
        a, b = min(a, self.top), min(b, self.top)
        out = linalg.identity(self.field, self.dims[a])
        for n in range(a, b):
            out = linalg.matmul(self.maps[n], out, self.field, self.dims[n], self.dims[a])
        return out

    def direct_sum(self, other: PersistenceModule) -> PersistenceModule:
        """Levelwise direct sum; the shorter module is extended by its constant tail."""
        if other.field != self.field:
            raise InputError("direct sum of modules over different fields")
        top = max(self.top, other.top)
        dims = [self.dim(n) + other.dim(n) for n in range(top + 1)]
        maps = []
        for n in range(top):
            f = linalg.zeros(self.field, dims[n + 1], dims[n])
            for mod, r0, c0 in ((self, 0, 0), (other, self.dim(n + 1), self.dim(n))):
                block = mod.maps[n] if n < mod.top else linalg.identity(self.field, mod.dim(n))
                for i, row in enumerate(block):
                    for j, x in enumerate(row):
                        f[r0 + i][c0 + j] = x
            maps.append(f)
        return PersistenceModule(self.field, dims, maps)

    def to_json(self):
        out = dict(self.field.to_json())
        out["dims"] = list(self.dims)
        out["maps"] = [[[str(x) for x in row] for row in f] for f in self.maps]
        return out

    @classmethod
    def from_json(cls, obj, field=None) -> PersistenceModule:
        if not isinstance(obj, dict) or not isinstance(obj.get("dims"), list):
            raise InputError("persistence module JSON needs a 'dims' list")
        field = field or parse_field(obj)
        maps = obj.get("maps", [])
        if not isinstance(maps, list):
            raise InputError("'maps' must be a list of matrices")
        return cls(field, obj["dims"], maps)


def presentation_from_persistence(P: PersistenceModule) -> GradedPresentation:
    field = P.field
    gen_degrees = []
    offset = []  # index of the first generator of each level
    for n, d in enumerate(P.dims):
        offset.append(len(gen_degrees))
        gen_degrees.extend([n] * d)
    rel_degrees = [n + 1 for n in range(P.top) for _ in range(P.dims[n])]
    A = GradedMatrix(field, gen_degrees, rel_degrees)
    t = HomogeneousTerm(field.one, 1)
    col = 0
    for n in range(P.top):
        f = P.maps[n]
        for i in range(P.dims[n]):
            A.entries[offset[n] + i][col] = t
            for j in range(P.dims[n + 1]):
                if f[j][i]:
                    A.entries[offset[n + 1] + j][col] = HomogeneousTerm(-f[j][i], 0)
            col += 1
    return GradedPresentation(field, GradedMatrix(field, gen_degrees, rel_degrees, A.entries))


def decompose(pres: GradedPresentation) -> GradedSignature:
    return quotient_signature(reduce(pres.matrix).reduced)
