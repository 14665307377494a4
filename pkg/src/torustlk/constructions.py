"""Explicit transformation sequences that carry a letter, or a word, across full twists.

The full twist is always the word ``P^m`` with ``P = sigma_1 ... sigma_{m-1}``.
Fragments are built on their own small window and spliced into a larger word
at an offset computed against the live word at splice time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .braid import BraidWord, Letter, compose, full_twist, is_pure, power
from .errors import InvariantViolation, PreconditionError
from .pairs import StructuredPair3
from .rewriting import Move, TransformationSequence, apply_move, tensor_from_points, triple_points
from .tensor import TripleLinkingTensor


@dataclass(frozen=True)
class SequenceBundle:
    seq: TransformationSequence
    target: BraidWord
    r3_count: int
    tensor: Optional[TripleLinkingTensor]
    provenance: str

    def metadata(self) -> dict:
        return {"provenance": self.provenance, "r3_count": self.r3_count}


class _Builder:
    def __init__(self, start: BraidWord):
        self.start = start
        self.word = start
        self.moves: list[Move] = []

    def apply(self, move: Move) -> None:
        self.word = apply_move(self.word, move)
        self.moves.append(move)

    def splice(self, fragment: TransformationSequence, offset: int) -> None:
        window = self.word.letters[offset:offset + len(fragment.start)]
        if window != fragment.start.letters:
            raise InvariantViolation(
                f"fragment starting [{fragment.start}] does not match the word at offset {offset}"
            )
        for move in fragment.moves:
            self.apply(move.shifted(offset))

    def sequence(self) -> TransformationSequence:
        return TransformationSequence(self.start, tuple(self.moves))


def _bundle(builder: _Builder, target: BraidWord, provenance: str, with_tensor: bool = True) -> SequenceBundle:
    if builder.word.letters != target.letters:
        raise InvariantViolation(f"{provenance}: built endpoint [{builder.word}] is not [{target}]")
    seq = builder.sequence()
    tensor = tensor_from_points(seq.m, triple_points(seq)) if with_tensor else None
    return SequenceBundle(seq, target, seq.r3_count, tensor, provenance)


def _cycle(m: int) -> BraidWord:
    return BraidWord(m, tuple((i, 1) for i in range(1, m)))


def _gen(m: int, i: int, sign: int = 1) -> BraidWord:
    return BraidWord(m, ((i, sign),))


def seq_slide(j: int, m: int) -> SequenceBundle:
    """``sigma_j P -> P sigma_{j-1}`` for ``2 <= j <= m-1``, with a single R3 move."""
    if not 2 <= j <= m - 1:
        raise PreconditionError(f"slide needs 2 <= j <= m-1, got j={j}, m={m}")
    b = _Builder(compose(_gen(m, j), _cycle(m)))
    for q in range(1, j - 1):
        b.apply(Move.commute(q))
    b.apply(Move.r3(j - 1))
    for q in range(j + 1, m):
        b.apply(Move.commute(q))
    return _bundle(b, compose(_cycle(m), _gen(m, j - 1)), f"slide(j={j},m={m})")


@lru_cache(maxsize=None)
def _interleave(m: int) -> TransformationSequence:
    # P P  ~>  s1 (s2 s1)(s3 s2)...(s_{m-1} s_{m-2}) s_{m-1}, far commutations only
    cycle = _cycle(m)
    b = _Builder(compose(cycle, cycle))
    for level in range(1, m - 1):
        src, dst = m - 1 + level, 2 * level + 1
        for q in range(src - 1, dst - 1, -1):
            b.apply(Move.commute(q))
    return b.sequence()


def seq_wrap(m: int) -> SequenceBundle:
    """``sigma_1 P^2 -> P^2 sigma_{m-1}`` using ``m - 2`` R3 moves."""
    if m < 3:
        raise PreconditionError(f"wrap needs m >= 3, got {m}")
    cycle = _cycle(m)
    b = _Builder(compose(_gen(m, 1), compose(cycle, cycle)))
    inter = _interleave(m)
    b.splice(inter, 1)
    for level in range(1, m - 1):
        b.apply(Move.r3(2 * level))
    b.splice(inter.reversed(), 0)
    return _bundle(b, compose(compose(cycle, cycle), _gen(m, m - 1)), f"wrap(m={m})")


def _insert_cancelling(b: _Builder, pos: int, word: BraidWord) -> None:
    """Insert ``word^-1 word`` at ``pos`` by nesting inverse pairs from the middle out."""
    for t, (index, sign) in enumerate(reversed(word.letters)):
        b.apply(Move.insert(pos + t, index, "-+" if sign > 0 else "+-"))


def _delete_cancelling(b: _Builder, pos: int, length: int) -> None:
    """Delete a freely cancelling block ``u u^-1`` of ``2 * length`` letters starting at ``pos``."""
    for t in range(length):
        b.apply(Move.delete(pos + length - 1 - t))


@lru_cache(maxsize=None)
def seq_sigma_past_delta(i: int, sign: int, m: int) -> SequenceBundle:
    """``sigma_i^sign D -> D sigma_i^sign`` with ``2(m - 2)`` R3 moves.

    Positive letters go through ``i - 1`` slides, one wrap and ``m - i - 1``
    slides.  An inverse letter is handled by inserting ``sigma_i sigma_i^-1``
    after D, running the positive sequence backwards on ``D sigma_i`` and
    deleting the resulting ``sigma_i^-1 sigma_i``.
    """
    if m < 3:
        raise PreconditionError(f"need m >= 3, got {m}")
    if not 1 <= i <= m - 1:
        raise PreconditionError(f"generator index {i} outside 1..{m - 1}")
    if sign not in (1, -1):
        raise PreconditionError(f"sign must be +1 or -1, got {sign}")
    delta = full_twist(m, 1)
    x = _gen(m, i, sign)
    b = _Builder(compose(x, delta))
    if sign > 0:
        width = m - 1
        for t in range(i - 1):
            b.splice(seq_slide(i - t, m).seq, t * width)
        b.splice(seq_wrap(m).seq, (i - 1) * width)
        for t in range(m - i - 1):
            b.splice(seq_slide(m - 1 - t, m).seq, (i + 1 + t) * width)
    else:
        b.apply(Move.insert(len(b.word) + 1, i, "+-"))
        b.splice(seq_sigma_past_delta(i, 1, m).seq.reversed(), 1)
        b.apply(Move.delete(1))
    return _bundle(b, compose(delta, x), f"sigma_past_delta(i={i},sign={sign:+d},m={m})")


@lru_cache(maxsize=None)
def _letter_past_twist(letter: Letter, eps: int, m: int) -> TransformationSequence:
    """``x D^eps -> D^eps x`` for a single letter ``x`` and ``eps = +-1``."""
    index, sign = letter
    forward = seq_sigma_past_delta(index, sign, m).seq
    if eps > 0:
        return forward
    # x D^-1 -> D^-1 D x D^-1 -> D^-1 x D D^-1 -> D^-1 x
    delta = full_twist(m, 1)
    size = len(delta)
    b = _Builder(compose(_gen(m, index, sign), full_twist(m, -1)))
    _insert_cancelling(b, 1, delta)
    b.splice(forward.reversed(), size)
    _delete_cancelling(b, size + 2, size)
    if b.word.letters != compose(full_twist(m, -1), _gen(m, index, sign)).letters:
        raise InvariantViolation("inverse-twist crossing ended at the wrong word")
    return b.sequence()


def _word_past_twist(word: BraidWord, eps: int) -> TransformationSequence:
    """``W D^eps -> D^eps W``, carrying the letters of W across one at a time, last first."""
    b = _Builder(compose(word, full_twist(word.m, eps)))
    for idx in range(len(word) - 1, -1, -1):
        b.splice(_letter_past_twist(word.letters[idx], eps, word.m), idx)
    return b.sequence()


def _word_past_twists(word: BraidWord, k: int) -> TransformationSequence:
    """``W D^k -> D^k W`` for any integer ``k``."""
    eps = 1 if k >= 0 else -1
    size = len(full_twist(word.m, 1))
    b = _Builder(compose(word, full_twist(word.m, k)))
    one = _word_past_twist(word, eps)
    for c in range(abs(k)):
        b.splice(one, c * size)
    return b.sequence()


def _cancellations(word: BraidWord) -> list[Move]:
    """Deletions that freely reduce ``word``, leftmost pair first."""
    moves = []
    current = list(word.letters)
    while True:
        for p in range(len(current) - 1):
            (i, s), (j, t) = current[p], current[p + 1]
            if i == j and s == -t:
                moves.append(Move.delete(p + 1))
                del current[p:p + 2]
                break
        else:
            break
    return moves


def _free_bridge(b: _Builder, target: BraidWord) -> None:
    """Rewrite the live word into ``target`` using only insertions and deletions."""
    for move in _cancellations(b.word):
        b.apply(move)
    down = TransformationSequence(target, tuple(_cancellations(target)))
    up = down.reversed()
    if up.start.letters != b.word.letters:
        raise PreconditionError(f"[{b.word}] and [{target}] are not freely equal")
    b.splice(up, 0)


def seq_b_delta_n(b: BraidWord, n: int) -> SequenceBundle:
    """``b D^n -> D^n b`` with ``2(m - 2) * n * len(b)`` R3 moves.

    The tensor is extracted only when ``b`` is pure.
    """
    if n < 0:
        raise PreconditionError(f"n must be non-negative, got {n}")
    if b.m < 3:
        raise PreconditionError(f"need m >= 3, got {b.m}")
    builder = _Builder(compose(b, full_twist(b.m, n)))
    builder.splice(_word_past_twists(b, n), 0)
    return _bundle(builder, compose(full_twist(b.m, n), b),
                   f"b_delta_n(n={n})", with_tensor=is_pure(b))


def seq_structured3(p: StructuredPair3) -> SequenceBundle:
    """``a b -> b a`` for ``a = D^k1 w^l1``, ``b = D^k2 w^l2`` on three strands.

    First ``D^k2`` moves left across ``w^l1``, then the twist block and the
    ``w`` block are regrouped by free cancellations, then ``D^k1`` moves
    right across ``w^l2``.
    """
    m, size = 3, len(full_twist(3, 1))
    wa, wb = power(p.w, p.l1), power(p.w, p.l2)
    da, db = full_twist(m, p.k1), full_twist(m, p.k2)
    builder = _Builder(compose(p.a, p.b))

    builder.splice(_word_past_twists(wa, p.k2), abs(p.k1) * size)
    _free_bridge(builder, compose(compose(db, da), compose(wb, wa)))
    builder.splice(_word_past_twists(wb, p.k1).reversed(), abs(p.k2) * size)

    label = f"structured3(k1={p.k1},l1={p.l1},k2={p.k2},l2={p.l2})"
    return _bundle(builder, compose(p.b, p.a), label)
