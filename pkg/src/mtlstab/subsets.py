"""Subsets of an algebra's carrier as single-word bit vectors.

Every stabilizer and filter operation consumes and produces these.  A subset
is value-typed to the algebra it was built from; mixing subsets of different
algebra objects is a programming error and is rejected at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import FiniteMtlAlgebra, require_validated

EMPTY_SET_SYMBOL = "∅"


class SubsetError(ValueError):
    pass


class EmptySubsetError(SubsetError):
    """Raised where an operation is defined only for nonempty inputs."""


@dataclass(frozen=True, eq=False)
class Subset:
    algebra: FiniteMtlAlgebra = field(repr=False)
    bits: int

    def __post_init__(self):
        require_validated(self.algebra)
        if self.bits < 0 or self.bits >> self.algebra.n:
            raise SubsetError(f"bit pattern {self.bits:#x} exceeds carrier size")

    def _check(self, other: "Subset") -> None:
        if self.algebra is not other.algebra:
            raise SubsetError("subsets belong to different algebras")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.algebra is other.algebra and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.bits))

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __and__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.algebra, self.bits & other.bits)

    def __or__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.algebra, self.bits | other.bits)

    def complement(self) -> "Subset":
        return Subset(self.algebra, ~self.bits & (1 << self.algebra.n) - 1)

    def issubset(self, other: "Subset") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def is_empty(self) -> bool:
        return self.bits == 0

    def members(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.algebra.n) if self.bits >> x & 1)

    def member_labels(self) -> tuple[str, ...]:
        return tuple(self.algebra.labels[x] for x in self.members())

    def render(self) -> str:
        """Comma-joined labels in carrier order; the empty set renders as ∅."""
        if self.bits == 0:
            return EMPTY_SET_SYMBOL
        return ",".join(self.member_labels())

    def __repr__(self) -> str:
        return f"Subset({{{self.render()}}})"


def empty(A: FiniteMtlAlgebra) -> Subset:
    return Subset(A, 0)


def full(A: FiniteMtlAlgebra) -> Subset:
    return Subset(A, (1 << A.n) - 1)


def singleton(A: FiniteMtlAlgebra, x: int) -> Subset:
    if not 0 <= x < A.n:
        raise SubsetError(f"element {x} outside carrier")
    return Subset(A, 1 << x)


def from_elements(A: FiniteMtlAlgebra, xs: Iterable[int]) -> Subset:
    bits = 0
    for x in xs:
        if not 0 <= x < A.n:
            raise SubsetError(f"element {x} outside carrier")
        bits |= 1 << x
    return Subset(A, bits)


def from_labels(A: FiniteMtlAlgebra, labels: Iterable[str] | str) -> Subset:
    if isinstance(labels, str):
        labels = [tok for tok in labels.split(",") if tok]
    return from_elements(A, (A.index(lbl) for lbl in labels))


def require_nonempty(X: Subset) -> Subset:
    if X.bits == 0:
        raise EmptySubsetError("operation is defined only for nonempty subsets")
    return X


def all_nonempty_subsets(A: FiniteMtlAlgebra) -> Iterator[Subset]:
    """All nonempty subsets in ascending bit-pattern order."""
    for bits in range(1, 1 << A.n):
        yield Subset(A, bits)
