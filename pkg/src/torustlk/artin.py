"""Exact word problem via the Artin action of B_m on the free group F_m.

sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i, fixing the other
generators.  The action is faithful, so two braid words are equal in B_m
exactly when they induce the same automorphism, i.e. the same reduced images
of x_1..x_m.  Free-group words are tuples of nonzero ints, ``-j`` standing
for x_j^-1.
"""

from __future__ import annotations

from typing import Iterable

from .braid import BraidWord, Letter, compose, inverse
from .errors import PreconditionError

FreeWord = tuple[int, ...]
Images = tuple[FreeWord, ...]


def _join(*parts: FreeWord) -> FreeWord:
    # each part is already reduced, so cancellation only happens at the seams
    out: list[int] = []
    for part in parts:
        k = 0
        n = len(part)
        while k < n and out and out[-1] == -part[k]:
            out.pop()
            k += 1
        out.extend(part[k:])
    return tuple(out)


def _inv(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


def identity_images(m: int) -> Images:
    return tuple((j,) for j in range(1, m + 1))


def act(images: Images, letters: Iterable[Letter]) -> Images:
    """Compose the automorphism ``images`` with the given letters, left to right."""
    img = list(images)
    for i, sign in letters:
        a, b = img[i - 1], img[i]
        if sign > 0:
            img[i - 1] = _join(a, b, _inv(a))
            img[i] = a
        else:
            img[i - 1] = b
            img[i] = _join(_inv(b), a, b)
    return tuple(img)


def artin_images(word: BraidWord) -> Images:
    return act(identity_images(word.m), word.letters)


def artin_is_identity(word: BraidWord) -> bool:
    return artin_images(word) == identity_images(word.m)


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.m != v.m:
        raise PreconditionError(f"strand counts differ: {u.m} vs {v.m}")
    return artin_images(u) == artin_images(v)


def commutes(a: BraidWord, b: BraidWord) -> bool:
    return artin_is_identity(compose(compose(a, b), compose(inverse(a), inverse(b))))
