"""Cyclic groups, written additively, and injective multiplication maps between them.

Group elements are plain ``int`` coefficients of the chosen generator; the
group they live in is always known from context (a vertex or edge of a graph
of groups), so no wrapper object is carried around in the hot paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InfiniteIndex, ValidationError

INFINITE = None


@dataclass(frozen=True)
class CyclicGroup:
    """ℤ when ``order`` is None, otherwise ℤ/order (order 1 is trivial)."""

    order: int | None = INFINITE

    def __post_init__(self):
        if self.order is not None and (not isinstance(self.order, int) or self.order < 1):
            raise ValueError(f"cyclic group order must be a positive integer, got {self.order!r}")

    @classmethod
    def integers(cls) -> "CyclicGroup":
        return cls(INFINITE)

    @classmethod
    def mod(cls, k: int) -> "CyclicGroup":
        return cls(k)

    @property
    def is_infinite(self) -> bool:
        return self.order is None

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def reduce(self, value: int) -> int:
        return value if self.order is None else value % self.order

    def add(self, a: int, b: int) -> int:
        return self.reduce(a + b)

    def neg(self, a: int) -> int:
        return self.reduce(-a)

    def contains(self, value: int) -> bool:
        return isinstance(value, int) and (self.order is None or 0 <= value < self.order)

    def __str__(self):
        return "Z" if self.order is None else f"Z{self.order}"

    def to_json(self) -> dict:
        if self.order is None:
            return {"type": "Z"}
        return {"type": "Zmod", "order": self.order}


def reduce(value: int, group: CyclicGroup) -> int:
    """Canonical representative of ``value`` in ``group``."""
    return group.reduce(value)


@dataclass(frozen=True)
class GroupElement:
    value: int
    group: CyclicGroup

    def __post_init__(self):
        if not self.group.contains(self.value):
            raise ValueError(f"{self.value} is not a canonical element of {self.group}")


@dataclass(frozen=True)
class Embedding:
    """The homomorphism ``domain -> codomain`` sending the generator to ``multiplier``.

    Construction fails unless the map is a well-defined monomorphism of finite
    index. A trivial domain embeds anywhere finite regardless of the multiplier.
    """

    domain: CyclicGroup
    codomain: CyclicGroup
    multiplier: int

    def __post_init__(self):
        d, c, m = self.domain, self.codomain, self.multiplier
        if m == 0 and not (d.is_trivial and not c.is_infinite):
            raise ValidationError("multiplier must be non-zero", kind="non-injective")
        if c.is_infinite:
            if not d.is_infinite:
                # ℤ/k -> ℤ is zero; the trivial group embeds but with infinite index
                kind = "not-row-finite" if d.is_trivial else "non-injective"
                raise ValidationError(f"{d} -> {c} by x{m} has no finite-index image", kind=kind)
            return
        if d.is_infinite:
            raise ValidationError(f"{d} -> {c} cannot be injective", kind="non-injective")
        j, k = c.order, d.order
        if k == 1:
            return
        if j % k or gcd(m, j) != j // k:
            raise ValidationError(f"{d} -> {c} by x{m} is not an injective homomorphism",
                                  kind="non-injective")

    @property
    def index(self) -> int:
        """``[codomain : image]``, the size of the canonical transversal."""
        if self.codomain.is_infinite:
            if self.multiplier == 0:
                raise InfiniteIndex("zero multiplier into an infinite group")
            return abs(self.multiplier)
        return self.codomain.order // self.domain.order

    def apply(self, q: int) -> int:
        return self.codomain.reduce(self.multiplier * q)

    def decompose(self, g: int) -> tuple[int, int]:
        """Split ``g = rep + apply(quot)`` with ``rep`` in ``{0, ..., index-1}``."""
        c = self.codomain
        g = c.reduce(g)
        d = self.index
        rep = g % d
        if c.is_infinite:
            return rep, (g - rep) // self.multiplier
        k = self.domain.order
        if k == 1:
            return rep, 0
        # image is generated by d; multiplier = d*u with u a unit mod k
        u = (self.multiplier // d) % k
        quot = ((g - rep) // d) * pow(u, -1, k) % k
        return rep, quot


def decompose(g: int, emb: Embedding) -> tuple[int, int]:
    return emb.decompose(g)


def transversal_size(emb: Embedding) -> int:
    return emb.index
