"""Pairwise linking numbers of closed pure braids."""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, is_pure
from .errors import InvariantViolation, NotPureError


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix, 1-based via :meth:`lk`; component ``l`` is strand ``l``."""

    m: int
    entries: tuple[tuple[int, ...], ...]

    def lk(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def __add__(self, other: LinkingMatrix) -> LinkingMatrix:
        return LinkingMatrix(self.m, tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __neg__(self) -> LinkingMatrix:
        return LinkingMatrix(self.m, tuple(tuple(-x for x in r) for r in self.entries))

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.m) for j in range(self.m)
        ) and all(self.entries[i][i] == 0 for i in range(self.m))

    def to_json(self) -> dict:
        return {"m": self.m, "entries": [list(r) for r in self.entries]}


def linking_matrix(word: BraidWord) -> LinkingMatrix:
    """Half the signed crossing count between each pair of strands.

    Walks the word keeping track of which strand sits at each position; a
    letter sigma_i^e adds ``e`` to the pair of strands at positions i, i+1.
    """
    if not is_pure(word):
        raise NotPureError(f"[{word}] is not a pure braid; closure components are not strands")
    m = word.m
    at = list(range(m + 1))
    acc = [[0] * (m + 1) for _ in range(m + 1)]
    for i, sign in word.letters:
        s, t = at[i], at[i + 1]
        acc[s][t] += sign
        acc[t][s] += sign
        at[i], at[i + 1] = t, s
    rows = []
    for s in range(1, m + 1):
        row = []
        for t in range(1, m + 1):
            if acc[s][t] % 2:
                raise InvariantViolation(
                    f"odd crossing count {acc[s][t]} between strands {s} and {t} of a pure braid"
                )
            row.append(acc[s][t] // 2)
        rows.append(tuple(row))
    return LinkingMatrix(m, tuple(rows))
