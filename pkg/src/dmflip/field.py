"""Exact arithmetic in GF(2), GF(3) and GF(4).

Elements are stored as small integers.  GF(4) uses the two-bit encoding
``b1*w + b0`` so that ``0, 1, 2, 3`` stand for ``0, 1, w, w2`` with
``w**2 = w + 1``; addition is XOR and multiplication is table driven.

Matrix code works directly on the integer encodings through the tables
exposed by :class:`FieldKind`; :class:`FieldElement` is the typed wrapper
used at the public surface.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Tuple

from .errors import FieldDivisionError, ParseError, StructuralError

Table = Tuple[Tuple[int, ...], ...]


def _gf4_mul(a: int, b: int) -> int:
    # carry-less product reduced modulo x^2 + x + 1
    prod = 0
    for i in range(2):
        if (b >> i) & 1:
            prod ^= a << i
    if prod & 0b100:
        prod ^= 0b111
    return prod


def _build_tables(name: str):
    if name == "GF2":
        q = 2
        add = tuple(tuple(a ^ b for b in range(q)) for a in range(q))
        mul = tuple(tuple(a & b for b in range(q)) for a in range(q))
        tokens = ("0", "1")
    elif name == "GF3":
        q = 3
        add = tuple(tuple((a + b) % 3 for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % 3 for b in range(q)) for a in range(q))
        tokens = ("0", "1", "2")
    else:
        q = 4
        add = tuple(tuple(a ^ b for b in range(q)) for a in range(q))
        mul = tuple(tuple(_gf4_mul(a, b) for b in range(q)) for a in range(q))
        tokens = ("0", "1", "w", "w2")
    neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
    inv = (0,) + tuple(next(b for b in range(q) if mul[a][b] == 1) for a in range(1, q))
    return q, add, mul, neg, inv, tokens


class FieldKind(enum.Enum):
    """The three supported finite fields."""

    GF2 = "GF2"
    GF3 = "GF3"
    GF4 = "GF4"

    def __init__(self, name: str):
        q, add, mul, neg, inv, tokens = _build_tables(name)
        self.order: int = q
        self.add: Table = add
        self.mul: Table = mul
        self.neg: Tuple[int, ...] = neg
        # inv[0] is a placeholder; callers must check for zero first
        self.inv: Tuple[int, ...] = inv
        self.tokens: Tuple[str, ...] = tokens
        self.characteristic: int = 3 if name == "GF3" else 2

    @property
    def elements(self) -> range:
        return range(self.order)

    def token(self, value: int) -> str:
        return self.tokens[value]

    def parse_token(self, token: str) -> int:
        try:
            return self.tokens.index(token)
        except ValueError:
            raise ParseError(f"{token!r} is not an element of {self.value}") from None

    @classmethod
    def parse(cls, name: str) -> "FieldKind":
        try:
            return cls(name)
        except ValueError:
            raise ParseError(f"unknown field {name!r}; expected GF2, GF3 or GF4") from None


GF2 = FieldKind.GF2
GF3 = FieldKind.GF3
GF4 = FieldKind.GF4

# readable names for the GF(4) encodings
ZERO, ONE, W, W2 = 0, 1, 2, 3


@dataclass(frozen=True)
class FieldElement:
    kind: FieldKind
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.kind.order:
            raise StructuralError(f"{self.value} is not a valid {self.kind.value} encoding")

    @classmethod
    def parse(cls, kind: FieldKind, token: str) -> "FieldElement":
        return cls(kind, kind.parse_token(token))

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.kind is not self.kind:
            raise StructuralError(f"cannot combine {self.kind.value} with {other!r}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.kind, self.kind.add[self.value][other.value])

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.kind, self.kind.neg[self.value])

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.kind, self.kind.mul[self.value][other.value])

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise FieldDivisionError(f"zero has no inverse in {self.kind.value}")
        return FieldElement(self.kind, self.kind.inv[self.value])

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return self.kind.token(self.value)

    def __repr__(self) -> str:
        return f"{self.kind.value}({self})"


@dataclass(frozen=True)
class Automorphism:
    """Field automorphism: ``identity`` for every field, ``inversion`` on GF(4) only.

    On GF(4) inversion is ``x -> x**-1`` for nonzero ``x``, i.e. the Frobenius
    squaring map; it swaps ``w`` and ``w2`` and fixes the prime subfield.
    """

    kind: FieldKind
    tag: str = "identity"

    def __post_init__(self):
        if self.tag not in ("identity", "inversion"):
            raise StructuralError(f"unknown automorphism tag {self.tag!r}")
        if self.tag == "inversion" and self.kind is not FieldKind.GF4:
            raise StructuralError(f"{self.kind.value} has no nontrivial automorphism")

    @classmethod
    def identity(cls, kind: FieldKind) -> "Automorphism":
        return cls(kind, "identity")

    @classmethod
    def inversion(cls, kind: FieldKind = FieldKind.GF4) -> "Automorphism":
        return cls(kind, "inversion")

    @classmethod
    def parse(cls, kind: FieldKind, name: str) -> "Automorphism":
        """Accepts ``id``/``identity`` and ``inv``/``inversion``."""
        tag = {"id": "identity", "identity": "identity", "inv": "inversion", "inversion": "inversion"}.get(name)
        if tag is None:
            raise ParseError(f"unknown automorphism {name!r}")
        return cls(kind, tag)

    @property
    def short_name(self) -> str:
        return "id" if self.tag == "identity" else "inv"

    @property
    def table(self) -> Tuple[int, ...]:
        if self.tag == "identity":
            return tuple(self.kind.elements)
        return (0,) + tuple(self.kind.inv[x] for x in range(1, self.kind.order))

    def __call__(self, a: FieldElement) -> FieldElement:
        return apply_automorphism(self, a)


def _same_kind(a: FieldElement, b: FieldElement) -> None:
    if a.kind is not b.kind:
        raise StructuralError(f"field mismatch: {a.kind.value} vs {b.kind.value}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_kind(a, b)
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_kind(a, b)
    return a * b


def mul_inverse(a: FieldElement) -> FieldElement:
    return a.inverse()


def apply_automorphism(alpha: Automorphism, a: FieldElement) -> FieldElement:
    if alpha.kind is not a.kind:
        raise StructuralError(f"automorphism of {alpha.kind.value} applied to {a.kind.value} element")
    return FieldElement(a.kind, alpha.table[a.value])


def supported_automorphisms(kind: FieldKind) -> Tuple[Automorphism, ...]:
    if kind is FieldKind.GF4:
        return (Automorphism.identity(kind), Automorphism.inversion(kind))
    return (Automorphism.identity(kind),)


def reciprocal_automorphism(kind: FieldKind) -> Automorphism:
    """The automorphism sending every nonzero ``x`` to ``x**-1``.

    It exists for exactly the three supported fields: the identity on GF(2)
    and GF(3), inversion on GF(4).
    """
    return Automorphism.inversion(kind) if kind is FieldKind.GF4 else Automorphism.identity(kind)
