"""Homogeneous elements of K[T] and decomposition signatures.

Every homogeneous element of K[T] is a monomial ``c * T**d``, so that is
all this module models.  A graded cyclic summand ``Σ^n K[T]/(T^k)`` is the
pair ``(n, k)`` with ``k`` a positive integer or :data:`INF` for the free
summand ``Σ^n K[T]``.
"""

from __future__ import annotations

import math
from collections import Counter

from .errors import InputError, NonDivisibleError
from .field import FieldElement, FieldSpec

#: Torsion exponent of a free summand (``T^∞ := 0``).
INF = math.inf


class HomogeneousTerm:
    """``coeff * T**degree``; the zero term always has degree 0."""

    __slots__ = ("coeff", "degree")

    def __init__(self, coeff: FieldElement, degree: int = 0):
        if degree < 0:
            raise InputError(f"negative degree {degree}")
        self.coeff = coeff
        self.degree = degree if coeff else 0

    @classmethod
    def zero(cls, field: FieldSpec) -> HomogeneousTerm:
        return cls(field.zero, 0)

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, coeff=1) -> HomogeneousTerm:
        return cls(field(coeff), degree)

    @property
    def field(self) -> FieldSpec:
        return self.coeff.field

    def __bool__(self):
        return bool(self.coeff)

    def __mul__(self, other: HomogeneousTerm) -> HomogeneousTerm:
        return HomogeneousTerm(self.coeff * other.coeff, self.degree + other.degree)

    def __truediv__(self, other: HomogeneousTerm) -> HomogeneousTerm:
        if not other:
            raise ZeroDivisionError("division by the zero term")
        if not self:
            self.coeff._check(other.coeff)
            return self
        if self.degree < other.degree:
            raise NonDivisibleError(f"T^{other.degree} does not divide T^{self.degree}")
        return HomogeneousTerm(self.coeff / other.coeff, self.degree - other.degree)

    def __add__(self, other: HomogeneousTerm) -> HomogeneousTerm:
        if not other:
            self.coeff._check(other.coeff)
            return self
        if not self:
            self.coeff._check(other.coeff)
            return other
        if self.degree != other.degree:
            raise InputError(f"sum of T^{self.degree} and T^{other.degree} is not homogeneous")
        return HomogeneousTerm(self.coeff + other.coeff, self.degree)

    def __neg__(self):
        return HomogeneousTerm(-self.coeff, self.degree)

    def __sub__(self, other: HomogeneousTerm) -> HomogeneousTerm:
        return self + (-other)

    def normalized(self) -> HomogeneousTerm:
        """The monic associate (``T**degree``); zero stays zero."""
        return HomogeneousTerm(self.field.one, self.degree) if self else self

    def __eq__(self, other):
        if not isinstance(other, HomogeneousTerm):
            return NotImplemented
        return self.coeff == other.coeff and self.degree == other.degree

    def __hash__(self):
        return hash((self.coeff, self.degree))

    def __repr__(self):
        if not self:
            return "0"
        return f"{self.coeff}*T^{self.degree}"

    def to_json(self):
        return [str(self.coeff), self.degree]

    @classmethod
    def from_json(cls, field: FieldSpec, obj) -> HomogeneousTerm:
        coeff, degree = obj
        return cls(field(coeff), _natural(degree, "degree"))


def term_mul(a: HomogeneousTerm, b: HomogeneousTerm) -> HomogeneousTerm:
    return a * b


def term_div(a: HomogeneousTerm, b: HomogeneousTerm) -> HomogeneousTerm:
    return a / b


def _natural(value, what):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InputError(f"{what} must be a natural number, got {value!r}")
    return value


def _exponent(value):
    if value == INF or value == "inf":
        return INF
    k = _natural(value, "torsion exponent")
    if k == 0:
        raise InputError("torsion exponent 0 describes the zero module and is not stored")
    return k


class GradedSignature:
    """Multiset of summands ``(shift, exponent)``, kept sorted.

    Sorting is lexicographic with finite exponents before :data:`INF`.
    """

    __slots__ = ("summands",)

    def __init__(self, summands=()):
        pairs = [(_natural(n, "shift"), _exponent(k)) for n, k in summands]
        self.summands = tuple(sorted(pairs))

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __eq__(self, other):
        if not isinstance(other, GradedSignature):
            return NotImplemented
        return self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def __add__(self, other: GradedSignature) -> GradedSignature:
        return GradedSignature(self.summands + other.summands)

    def __repr__(self):
        return f"GradedSignature({list(self.summands)})"

    def counts(self) -> Counter:
        return Counter(self.summands)

    def hilbert_dim(self, d: int) -> int:
        return sum(1 for n, k in self.summands if n <= d < n + k)

    def free_rank(self) -> int:
        return sum(1 for _, k in self.summands if k == INF)

    def to_json(self):
        return [[n, "inf" if k == INF else k] for n, k in self.summands]

    @classmethod
    def from_json(cls, obj) -> GradedSignature:
        return cls((n, k) for n, k in obj)


def signature_hilbert_dim(sig: GradedSignature, d: int) -> int:
    """``dim_K`` of the degree-``d`` part of ``⊕ Σ^n K[T]/(T^k)``."""
    return sig.hilbert_dim(d)
