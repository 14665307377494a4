"""Triple linking numbers Tlk_{i,j,k}, stored sparsely."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Mapping

Triple = tuple[int, int, int]


def admissible_triples(m: int) -> Iterator[Triple]:
    """All ``(i, j, k)`` in ``1..m`` with ``i != j`` and ``j != k``, lexicographically."""
    for i, j, k in product(range(1, m + 1), repeat=3):
        if i != j and j != k:
            yield (i, j, k)


class TripleLinkingTensor:
    """Map from admissible triples to integers; absent triples are zero."""

    __slots__ = ("m", "_values")

    def __init__(self, m: int, values: Mapping[Triple, int] | Iterable[tuple[Triple, int]] = ()):
        self.m = m
        items = values.items() if isinstance(values, Mapping) else values
        acc: dict[Triple, int] = {}
        for key, v in items:
            key = tuple(int(x) for x in key)
            i, j, k = key
            if not (1 <= min(key) and max(key) <= m and i != j and j != k):
                raise ValueError(f"{key} is not an admissible triple for m={m}")
            acc[key] = acc.get(key, 0) + int(v)
        self._values = {key: v for key, v in sorted(acc.items()) if v}

    @classmethod
    def zero(cls, m: int) -> TripleLinkingTensor:
        return cls(m)

    def __getitem__(self, key: Triple) -> int:
        return self._values.get(tuple(key), 0)

    def items(self):
        return self._values.items()

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TripleLinkingTensor):
            return NotImplemented
        return self.m == other.m and self._values == other._values

    def __hash__(self) -> int:
        return hash((self.m, tuple(self._values.items())))

    def __add__(self, other: TripleLinkingTensor) -> TripleLinkingTensor:
        if self.m != other.m:
            raise ValueError(f"strand counts differ: {self.m} vs {other.m}")
        return TripleLinkingTensor(self.m, list(self.items()) + list(other.items()))

    def __neg__(self) -> TripleLinkingTensor:
        return self * -1

    def __mul__(self, c: int) -> TripleLinkingTensor:
        return TripleLinkingTensor(self.m, {key: c * v for key, v in self.items()})

    __rmul__ = __mul__

    def abs_sum(self) -> int:
        return sum(abs(v) for v in self._values.values())

    def is_antisymmetric(self) -> bool:
        for (i, j, k) in admissible_triples(self.m):
            if i == k:
                if self[i, j, k]:
                    return False
            elif self[k, j, i] != -self[i, j, k]:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "entries": [{"i": i, "j": j, "k": k, "v": v} for (i, j, k), v in self.items()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> TripleLinkingTensor:
        return cls(obj["m"], [((e["i"], e["j"], e["k"]), e["v"]) for e in obj["entries"]])

    def __repr__(self) -> str:
        body = ", ".join(f"{key}: {v:+d}" for key, v in self.items())
        return f"TripleLinkingTensor(m={self.m}, {{{body}}})"
