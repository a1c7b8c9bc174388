"""Exact coefficient fields: GF(p) for a prime p, and the rationals.

>>> F = FieldSpec.gf(5)
>>> F(3) + F(4)
GF5(2)
>>> Q = FieldSpec.rationals()
>>> Q.parse("1/2") + Q.parse("1/3")
Q(5/6)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError, InputError

# Single machine word, see README.
MAX_PRIME = 2**63


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field.  ``p is None`` means the rationals."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int):
                raise InputError(f"field characteristic must be an integer, got {self.p!r}")
            if self.p >= MAX_PRIME or not is_prime(self.p):
                raise InputError(f"GF(p) needs a single-word prime p, got {self.p}")

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0 if self.p else Fraction(0))

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1 if self.p else Fraction(1))

    def __call__(self, value) -> FieldElement:
        """Coerce an int, Fraction or decimal/fraction string into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"cannot coerce {value!r} into {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise InputError(f"not a field element: {value!r}")
        if self.p:
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
                return FieldElement(self, value.numerator * pow(value.denominator, -1, self.p) % self.p)
            if isinstance(value, int):
                return FieldElement(self, value % self.p)
        else:
            if isinstance(value, (int, Fraction)):
                return FieldElement(self, Fraction(value))
        raise InputError(f"not a field element: {value!r}")

    def parse(self, text: str) -> FieldElement:
        text = text.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse field element {text!r}") from None
        if value.denominator != 1 and "/" not in text:
            # Reject decimals such as "0.5": coefficients are exact.
            raise InputError(f"cannot parse field element {text!r}")
        return self(value)

    def elements(self):
        """All elements of a prime field, in residue order."""
        if not self.p:
            raise InputError("the rationals are not finite")
        return [FieldElement(self, v) for v in range(self.p)]

    def random_element(self, rng, nonzero=False) -> FieldElement:
        if self.p:
            lo = 1 if nonzero else 0
            return FieldElement(self, rng.randrange(lo, self.p))
        while True:
            value = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if value or not nonzero:
                return FieldElement(self, value)

    def to_json(self) -> dict:
        return {"field": "gf", "p": self.p} if self.p else {"field": "q"}

    def __str__(self):
        return f"GF({self.p})" if self.p else "Q"


class FieldElement:
    """An immutable element of a :class:`FieldSpec`.

    GF(p) values are residues in ``[0, p)``; rational values are
    :class:`fractions.Fraction`, which keeps them reduced with a positive
    denominator.  Build these through the field (``F(3)``) rather than
    directly.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    def _check(self, other) -> None:
        if not isinstance(other, FieldElement):
            raise FieldMismatchError(f"expected a field element, got {other!r}")
        if other.field != self.field:
            raise FieldMismatchError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        v = self.value + other.value
        return FieldElement(self.field, v % p if p else v)

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        v = self.value - other.value
        return FieldElement(self.field, v % p if p else v)

    def __mul__(self, other):
        self._check(other)
        p = self.field.p
        v = self.value * other.value
        return FieldElement(self.field, v % p if p else v)

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, -self.value % p if p else -self.value)

    def inv(self) -> FieldElement:
        if not self.value:
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        p = self.field.p
        return FieldElement(self.field, pow(self.value, -1, p) if p else 1 / self.value)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inv()

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        name = f"GF{self.field.p}" if self.field.p else "Q"
        return f"{name}({self.value})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def parse_field(obj) -> FieldSpec:
    """Read a field from JSON.

    Accepts ``{"field": "gf", "p": 5}``, ``{"field": "q"}``, or the short
    strings ``"gf5"`` / ``"q"`` used by the CLI.
    """
    if isinstance(obj, FieldSpec):
        return obj
    if isinstance(obj, str):
        s = obj.strip().lower()
        if s in ("q", "qq", "rationals"):
            return FieldSpec.rationals()
        if s.startswith("gf") and s[2:].isdigit():
            return FieldSpec.gf(int(s[2:]))
        raise InputError(f"unknown field {obj!r}")
    if isinstance(obj, dict):
        kind = obj.get("field")
        if isinstance(kind, dict):
            return parse_field(kind)
        if kind == "q":
            return FieldSpec.rationals()
        if kind == "gf":
            if "p" not in obj:
                raise InputError("GF field needs a 'p' entry")
            return FieldSpec.gf(obj["p"])
        if isinstance(kind, str):
            return parse_field(kind)
    raise InputError(f"cannot read field from {obj!r}")
