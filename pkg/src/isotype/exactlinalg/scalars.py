"""Exact scalars over the rationals or a prime field of characteristic at least 5."""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from isotype.errors import FieldError, FieldMismatchError

# Raw ground-domain element (sympy QQ or GF(p) dtype). Vectors and structure constants store these.
Elem = Any

_SCALAR_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")
_FIELD_RE = re.compile(r"^\s*(?:GF|F|Z/)\(?(\d+)\)?\s*$", re.IGNORECASE)


@lru_cache(maxsize=None)
def _domain(characteristic: int) -> Domain:
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class Field:
    """
    Descriptor of the ground field.

    ``characteristic == 0`` selects the rationals; otherwise a prime p >= 5.
    Only the characteristic is stored, so descriptors pickle and compare by value.
    """

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p == 0:
            return
        if p in (2, 3):
            raise FieldError(f"characteristic {p} is not supported (need 0 or a prime >= 5)")
        if p < 0 or not isprime(p):
            raise FieldError(f"GF({p}) is not a prime field")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``Q``, ``QQ``, ``GF(p)``, ``F7`` or ``Z/7``."""
        if text.strip().upper() in ("Q", "QQ"):
            return cls(0)
        match = _FIELD_RE.match(text)
        if not match:
            raise FieldError(f"unknown field descriptor {text!r}")
        return cls(int(match.group(1)))

    @property
    def domain(self) -> Domain:
        return _domain(self.characteristic)

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def zero(self) -> Elem:
        return self.domain.zero

    @property
    def one(self) -> Elem:
        return self.domain.one

    def __call__(self, numerator: int, denominator: int = 1) -> Elem:
        """Build the element numerator/denominator."""
        if denominator == 0:
            raise FieldError("zero denominator")
        K = self.domain
        if self.characteristic == 0:
            return K(numerator, denominator)
        den = K(denominator)
        if not den:
            raise FieldError(f"denominator {denominator} vanishes in {self.name}")
        return K(numerator) / den

    def parse_elem(self, text: str) -> Elem:
        """Parse ``-?digits(/digits)?`` into a raw element."""
        match = _SCALAR_RE.match(text)
        if not match:
            raise FieldError(f"malformed scalar {text!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        return self(numerator, denominator)

    def format(self, value: Elem) -> str:
        """Canonical text form: ``n``, ``n/d`` or a residue in [0, p)."""
        K = self.domain
        if self.characteristic == 0:
            num, den = int(K.numer(value)), int(K.denom(value))
            return str(num) if den == 1 else f"{num}/{den}"
        return str(int(K.to_int(value)) % self.characteristic)

    def __str__(self) -> str:
        return self.name


QQ_FIELD = Field(0)


@dataclass(frozen=True, eq=False)
class Scalar:
    """An element tagged with its field; arithmetic across fields is rejected."""

    field: Field
    value: Elem

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"cannot combine Scalar with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.value + other.value)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.value - other.value)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.value * other.value)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if not other.value:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.field, self.value / other.value)

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, -self.value)

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.one) / self

    def is_zero(self) -> bool:
        return not self.value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, str(self)))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field})"


def parse_scalar(text: str, field: Field | str = QQ_FIELD) -> Scalar:
    """
    Parse a rational literal into a canonical scalar of the given field.

    Args:
        text: Literal matching ``-?digits(/digits)?``
        field: Field descriptor or its text form

    Returns:
        Reduced fraction over Q, or a residue in [0, p) over GF(p)
    """
    if isinstance(field, str):
        field = Field.parse(field)
    return Scalar(field, field.parse_elem(text))
