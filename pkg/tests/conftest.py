from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from torustlk.braid import BraidWord, compose, full_twist, inverse, is_pure
from torustlk.rewriting import Move, TransformationSequence

SIGMA1_SQ_DELTA = [1, 1, 1, 2, 1, 2, 1, 2]  # A * Delta on 3 strands


def hand_sequence() -> TransformationSequence:
    """A Delta -> Delta A on 3 strands, four R3 moves written out by hand.

    s1 s1 (s1 s2 s1) s2 s1 s2 -> s1 s1 s2 s1 s2 (s2 s1 s2) -> s1 (s1 s2 s1) s2 s1 s2 s1
    -> s1 s2 s1 s2 (s2 s1 s2) s1 -> s1 s2 s1 s2 s1 s2 s1 s1
    """
    start = BraidWord.from_ints(3, SIGMA1_SQ_DELTA)
    return TransformationSequence(start, (Move.r3(3), Move.r3(6), Move.r3(2), Move.r3(5)))


def random_word(rng: random.Random, m: int, length: int) -> BraidWord:
    return BraidWord.from_ints(m, [rng.choice((1, -1)) * rng.randint(1, m - 1) for _ in range(length)])


def random_pure_word(rng: random.Random, m: int, max_len: int) -> BraidWord:
    """Pure word of even length drawn uniformly from 0..max_len, by rejection."""
    length = 2 * rng.randint(0, max_len // 2)
    while True:
        w = random_word(rng, m, length)
        if is_pure(w):
            return w


def thm3_word(rng: random.Random, m: int, max_len: int = 12) -> BraidWord:
    """A word in the blocks sigma_i^{2(-1)^i}, every i at least once, in random order."""
    blocks = list(range(1, m))
    while 2 * (len(blocks) + 1) <= max_len and rng.random() < 0.75:
        blocks.append(rng.randint(1, m - 1))
    rng.shuffle(blocks)
    ints = []
    for i in blocks:
        ints += [i * (-1) ** i] * 2
    return BraidWord.from_ints(m, ints)


# --- independent word-problem oracle: unreduced Burau matrices over Q ---

def _burau_gen(m: int, i: int, sign: int, t: Fraction):
    mat = [[Fraction(int(r == c)) for c in range(m)] for r in range(m)]
    a = i - 1
    if sign > 0:
        block = [[1 - t, t], [Fraction(1), Fraction(0)]]
    else:
        block = [[Fraction(0), Fraction(1)], [1 / t, 1 - 1 / t]]
    for r in range(2):
        for c in range(2):
            mat[a + r][a + c] = block[r][c]
    return mat


def _matmul(x, y):
    n = len(x)
    return [[sum(x[r][k] * y[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


def burau_is_identity(word: BraidWord, ts=(Fraction(2), Fraction(-3, 7))) -> bool:
    m = word.m
    ident = [[Fraction(int(r == c)) for c in range(m)] for r in range(m)]
    for t in ts:
        mat = ident
        for i, s in word.letters:
            mat = _matmul(mat, _burau_gen(m, i, s, t))
        if mat != ident:
            return False
    return True


# --- hypothesis strategies ---

@st.composite
def words(draw, m=None, max_len=12):
    m = draw(st.integers(3, 6)) if m is None else m
    ints = draw(st.lists(
        st.integers(1, m - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len
    ))
    return BraidWord.from_ints(m, ints)


@st.composite
def pure_words(draw, m=None, max_factors=3):
    """Products of conjugates x sigma_i^{+-2} x^-1: always pure."""
    m = draw(st.integers(3, 6)) if m is None else m
    out = BraidWord.identity(m)
    for _ in range(draw(st.integers(0, max_factors))):
        x = draw(words(m=m, max_len=3))
        i = draw(st.integers(1, m - 1))
        e = draw(st.sampled_from((1, -1)))
        core = BraidWord(m, ((i, e), (i, e)))
        out = compose(out, compose(compose(x, core), inverse(x)))
    return out


@pytest.fixture
def rng():
    return random.Random(20240125)


@pytest.fixture
def delta3():
    return full_twist(3, 1)


settings.register_profile("default", deadline=None)
settings.load_profile("default")
