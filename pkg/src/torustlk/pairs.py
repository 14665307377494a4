"""Certified commuting pairs of pure braids, and the structured m = 3 family."""

from __future__ import annotations

from dataclasses import dataclass

from .artin import commutes
from .braid import BraidWord, compose, full_twist, is_pure, power
from .errors import NotCommutingError, NotPureError, PreconditionError


@dataclass(frozen=True)
class CommutingPair:
    """Basis braids ``(a, b)``: pure, on the same strands, and commuting.

    Construction certifies both conditions with the exact word problem.
    """

    a: BraidWord
    b: BraidWord

    def __post_init__(self) -> None:
        if self.a.m != self.b.m:
            raise PreconditionError(f"strand counts differ: {self.a.m} vs {self.b.m}")
        for name, word in (("a", self.a), ("b", self.b)):
            if not is_pure(word):
                raise NotPureError(f"{name} = [{word}] is not a pure braid")
        if not commutes(self.a, self.b):
            raise NotCommutingError(f"a = [{self.a}] and b = [{self.b}] do not commute")

    @property
    def m(self) -> int:
        return self.a.m

    def product(self) -> BraidWord:
        return compose(self.a, self.b)

    def swapped_product(self) -> BraidWord:
        return compose(self.b, self.a)


@dataclass(frozen=True)
class StructuredPair3:
    """The pair ``a = D^k1 w^l1``, ``b = D^k2 w^l2`` on three strands, D the full twist."""

    w: BraidWord
    k1: int
    l1: int
    k2: int
    l2: int

    def __post_init__(self) -> None:
        if self.w.m != 3:
            raise PreconditionError(f"structured pairs live on 3 strands, got m={self.w.m}")
        if not is_pure(self.w):
            raise NotPureError(f"w = [{self.w}] is not a pure braid")

    @property
    def a(self) -> BraidWord:
        return compose(full_twist(3, self.k1), power(self.w, self.l1))

    @property
    def b(self) -> BraidWord:
        return compose(full_twist(3, self.k2), power(self.w, self.l2))


def expand_structured(p: StructuredPair3) -> CommutingPair:
    return CommutingPair(p.a, p.b)
