"""Braid words on ``m`` strands and the permutations they induce.

A word is stored as a tuple of ``(index, sign)`` letters, ``sign`` being
``+1`` for sigma_index and ``-1`` for its inverse.  The external text form
is a list of signed integers (``"1 -2"`` is sigma_1 sigma_2^-1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import PreconditionError, WordParseError

Letter = tuple[int, int]

_TOKEN_SPLIT = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class BraidWord:
    m: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.m < 2:
            raise PreconditionError(f"a braid needs at least 2 strands, got m={self.m}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for index, sign in letters:
            if not 1 <= index <= self.m - 1:
                raise WordParseError(f"generator index {index} out of range 1..{self.m - 1}")
            if sign not in (1, -1):
                raise WordParseError(f"letter sign must be +1 or -1, got {sign}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, m: int, values: Iterable[int]) -> BraidWord:
        letters = []
        for v in values:
            v = int(v)
            if v == 0:
                raise WordParseError("0 is not a generator")
            letters.append((abs(v), 1 if v > 0 else -1))
        return cls(m, tuple(letters))

    @classmethod
    def identity(cls, m: int) -> BraidWord:
        return cls(m, ())

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return BraidWord(self.m, self.letters[item])
        return self.letters[item]

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, n: int) -> BraidWord:
        return power(self, n)

    def inverse(self) -> BraidWord:
        return inverse(self)

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str, m: int) -> BraidWord:
    """Parse whitespace- or comma-separated signed generator indices."""
    values = []
    for token in _TOKEN_SPLIT.split(text.strip()):
        if not token:
            continue
        try:
            v = int(token)
        except ValueError:
            raise WordParseError(f"malformed token {token!r}") from None
        if v == 0:
            raise WordParseError("zero token: generators are numbered from 1")
        if abs(v) > m - 1:
            raise WordParseError(f"index {abs(v)} is out of range for m={m} (max {m - 1})")
        values.append(v)
    return BraidWord.from_ints(m, values)


def format_word(word: BraidWord) -> str:
    return " ".join(str(v) for v in word.to_ints())


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """Concatenate two words. No cancellation is performed."""
    if u.m != v.m:
        raise PreconditionError(f"strand counts differ: {u.m} vs {v.m}")
    return BraidWord(u.m, u.letters + v.letters)


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.m, tuple((i, -s) for i, s in reversed(u.letters)))


def power(u: BraidWord, n: int) -> BraidWord:
    """``u**n`` as a word; negative ``n`` repeats the inverse word."""
    base = u if n >= 0 else inverse(u)
    return BraidWord(u.m, base.letters * abs(n))


def full_twist(m: int, n: int = 1) -> BraidWord:
    """The word ((sigma_1 ... sigma_{m-1})^m)^n."""
    if m < 2:
        raise PreconditionError(f"full twist needs m >= 2, got {m}")
    cycle = tuple((i, 1) for i in range(1, m))
    return power(BraidWord(m, cycle * m), n)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..m}``.

    ``images[p - 1]`` is where the strand starting at position ``p`` ends up.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_cycles(cls, m: int, *cycles: Iterable[int]) -> Permutation:
        images = list(range(1, m + 1))
        for cycle in cycles:
            cycle = list(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(p)) for p in range(1, self.m + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.m
        for p, q in enumerate(self.images, start=1):
            inv[q - 1] = p
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.m + 1))


def strands_at_positions(word: BraidWord) -> list[int]:
    """Starting label of the strand occupying each position after ``word``.

    Index 0 is unused so that ``result[p]`` reads position ``p``.
    """
    at = list(range(word.m + 1))
    for i, _ in word.letters:
        at[i], at[i + 1] = at[i + 1], at[i]
    return at


def permutation_of(word: BraidWord) -> Permutation:
    at = strands_at_positions(word)
    images = [0] * word.m
    for pos in range(1, word.m + 1):
        images[at[pos] - 1] = pos
    return Permutation(tuple(images))


def is_pure(word: BraidWord) -> bool:
    return permutation_of(word).is_identity()
