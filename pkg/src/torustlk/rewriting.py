"""Transformation sequences between braid words, and the triple points they carry.

Four move kinds act on a word at a 1-based letter position ``pos``:

``insert``   put sigma_i sigma_i^-1 (order ``"+-"``) or sigma_i^-1 sigma_i (``"-+"``)
             so that its first letter lands at ``pos``
``delete``   remove an adjacent inverse pair starting at ``pos``
``commute``  swap the letters at ``pos`` and ``pos + 1`` when their indices differ by >1
``r3``       replace positive sigma_i sigma_j sigma_i with sigma_j sigma_i sigma_j, |i - j| = 1

Only ``r3`` moves carry triple points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .artin import act, artin_images, identity_images
from .braid import BraidWord, strands_at_positions
from .errors import MoveError, SequenceError
from .tensor import TripleLinkingTensor, Triple

KINDS = ("insert", "delete", "commute", "r3")
_ORDERS = {"+-": (1, -1), "-+": (-1, 1)}


@dataclass(frozen=True)
class Move:
    kind: str
    pos: int
    index: Optional[int] = None
    order: Optional[str] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise MoveError(f"unknown move kind {self.kind!r}")
        if self.kind == "insert":
            if self.index is None or self.order not in _ORDERS:
                raise MoveError("insert needs an index and an order of '+-' or '-+'")
        elif self.index is not None or self.order is not None:
            raise MoveError(f"{self.kind} takes no parameters")

    @classmethod
    def insert(cls, pos: int, index: int, order: str = "+-") -> Move:
        return cls("insert", pos, index, order)

    @classmethod
    def delete(cls, pos: int) -> Move:
        return cls("delete", pos)

    @classmethod
    def commute(cls, pos: int) -> Move:
        return cls("commute", pos)

    @classmethod
    def r3(cls, pos: int) -> Move:
        return cls("r3", pos)

    def shifted(self, offset: int) -> Move:
        return Move(self.kind, self.pos + offset, self.index, self.order)

    @property
    def params(self) -> dict:
        if self.kind == "insert":
            return {"index": self.index, "order": self.order}
        return {}


def apply_move(word: BraidWord, move: Move) -> BraidWord:
    letters = word.letters
    n = len(letters)
    p = move.pos - 1
    if move.kind == "insert":
        if not 0 <= p <= n:
            raise MoveError(f"insert position {move.pos} outside 1..{n + 1}")
        if not 1 <= move.index <= word.m - 1:
            raise MoveError(f"insert index {move.index} outside 1..{word.m - 1}")
        s1, s2 = _ORDERS[move.order]
        return BraidWord(word.m, letters[:p] + ((move.index, s1), (move.index, s2)) + letters[p:])

    width = 3 if move.kind == "r3" else 2
    if not 0 <= p <= n - width:
        raise MoveError(f"{move.kind} position {move.pos} outside 1..{n - width + 1} (word length {n})")
    window = letters[p:p + width]

    if move.kind == "delete":
        (i, s), (j, t) = window
        if i != j or s != -t:
            raise MoveError(f"no inverse pair at position {move.pos}: {_show(window)}")
        return BraidWord(word.m, letters[:p] + letters[p + 2:])

    if move.kind == "commute":
        (i, _), (j, _) = window
        if abs(i - j) <= 1:
            raise MoveError(f"letters at position {move.pos} are not distant: {_show(window)}")
        return BraidWord(word.m, letters[:p] + (window[1], window[0]) + letters[p + 2:])

    (i, s1), (j, s2), (i2, s3) = window
    if not (i == i2 and abs(i - j) == 1 and s1 == s2 == s3 == 1):
        raise MoveError(f"no positive sigma_i sigma_j sigma_i at position {move.pos}: {_show(window)}")
    return BraidWord(word.m, letters[:p] + ((j, 1), (i, 1), (j, 1)) + letters[p + 3:])


def _show(window) -> str:
    return " ".join(str(i * s) for i, s in window)


@dataclass(frozen=True)
class TransformationSequence:
    start: BraidWord
    moves: tuple[Move, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))

    @property
    def m(self) -> int:
        return self.start.m

    @property
    def r3_count(self) -> int:
        return sum(1 for mv in self.moves if mv.kind == "r3")

    def words(self) -> list[BraidWord]:
        """``[start, after move 1, ..., after move n]``; raises :class:`MoveError` on the first bad move."""
        out = [self.start]
        for step, move in enumerate(self.moves, start=1):
            try:
                out.append(apply_move(out[-1], move))
            except MoveError as exc:
                raise MoveError(f"step {step}: {exc}") from None
        return out

    def final(self) -> BraidWord:
        return self.words()[-1]

    def reversed(self) -> TransformationSequence:
        """The same chain of words walked backwards."""
        words = self.words()
        back = []
        for t in range(len(self.moves), 0, -1):
            mv, before = self.moves[t - 1], words[t - 1]
            if mv.kind == "insert":
                back.append(Move.delete(mv.pos))
            elif mv.kind == "delete":
                (idx, s), _ = before.letters[mv.pos - 1:mv.pos + 1]
                back.append(Move.insert(mv.pos, idx, "+-" if s > 0 else "-+"))
            else:
                back.append(mv)
        return TransformationSequence(words[-1], tuple(back))


@dataclass
class StepStatus:
    step: int
    move: Move
    ok: bool
    error: Optional[str] = None
    braid_equal: Optional[bool] = None


@dataclass
class ValidationReport:
    steps: list[StepStatus] = field(default_factory=list)
    replayed: bool = True
    endpoint_ok: bool = True
    final_word: Optional[BraidWord] = None
    audit: Optional[bool] = None
    errors: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.replayed and self.endpoint_ok and self.audit is not False

    def raise_if_invalid(self) -> None:
        if not self.valid:
            raise SequenceError("; ".join(self.errors) or "sequence is invalid")


class _PrefixAuditor:
    """Compares the Artin action of each new word with that of the start word.

    Prefix automorphisms are cached; only the part of the word after the
    longest common prefix with the previous word is recomputed.
    """

    def __init__(self, start: BraidWord):
        self.m = start.m
        self.target = artin_images(start)
        self.states = [identity_images(self.m)]
        self.letters: tuple = ()
        self._extend(start.letters, 0)

    def _extend(self, letters, keep: int) -> None:
        del self.states[keep + 1:]
        state = self.states[keep]
        for letter in letters[keep:]:
            state = act(state, (letter,))
            self.states.append(state)
        self.letters = letters

    def check(self, word: BraidWord) -> bool:
        keep = 0
        for x, y in zip(word.letters, self.letters):
            if x != y:
                break
            keep += 1
        self._extend(word.letters, keep)
        return self.states[-1] == self.target


def validate_sequence(
    seq: TransformationSequence,
    target: Optional[BraidWord] = None,
    audit: bool = False,
    expected_words: Optional[list[Optional[BraidWord]]] = None,
) -> ValidationReport:
    """Replay ``seq`` and report on every move.

    ``target`` is compared letter for letter with the final word.  With
    ``audit`` every intermediate word is checked to be the same braid as the
    start word.  ``expected_words[t]``, when given, must equal the word after
    move ``t + 1`` exactly.  Failures are collected, never raised.
    """
    report = ValidationReport()
    word = seq.start
    auditor = _PrefixAuditor(word) if audit else None
    if audit:
        report.audit = True
    for step, move in enumerate(seq.moves, start=1):
        try:
            word = apply_move(word, move)
        except MoveError as exc:
            report.steps.append(StepStatus(step, move, False, str(exc)))
            report.errors.append(f"step {step}: {exc}")
            report.replayed = False
            break
        status = StepStatus(step, move, True)
        if expected_words is not None and step - 1 < len(expected_words):
            want = expected_words[step - 1]
            if want is not None and want.letters != word.letters:
                status.ok = False
                status.error = f"word_after mismatch: declared [{want}], replay gives [{word}]"
                report.errors.append(f"step {step}: {status.error}")
                report.replayed = False
        if auditor is not None:
            status.braid_equal = auditor.check(word)
            if not status.braid_equal:
                report.audit = False
                report.errors.append(f"step {step}: word is not braid-equal to the start word")
        report.steps.append(status)
        if not status.ok:
            break
    if report.replayed:
        report.final_word = word
        if target is not None and target.letters != word.letters:
            report.endpoint_ok = False
            report.errors.append(f"endpoint [{word}] differs from target [{target}]")
    else:
        report.endpoint_ok = False
    return report


@dataclass(frozen=True)
class TriplePoint:
    sign: int
    type: Triple
    move_index: int

    def to_json(self) -> dict:
        return {"move_index": self.move_index, "sign": self.sign, "type": list(self.type)}


def triple_points(seq: TransformationSequence) -> list[TriplePoint]:
    """One signed, typed triple point per ``r3`` move.

    For ``w s_i s_j s_i w' -> w s_j s_i s_j w'`` the sign is ``+1`` when
    ``i < j``; with ``k = min(i, j)`` and ``tau`` the inverse of the prefix
    permutation, the (top, middle, bottom) type is ``(tau(k+2), tau(k+1), tau(k))``.
    Positions are labelled by the strand of the start word that occupies them.
    """
    words = seq.words()
    points = []
    for t, move in enumerate(seq.moves, start=1):
        if move.kind != "r3":
            continue
        before = words[t - 1]
        p = move.pos - 1
        (i, _), (j, _) = before.letters[p:p + 2]
        k = min(i, j)
        tau = strands_at_positions(before[:p])
        points.append(TriplePoint(1 if i < j else -1, (tau[k + 2], tau[k + 1], tau[k]), t))
    return points


def tensor_from_points(m: int, points: list[TriplePoint]) -> TripleLinkingTensor:
    return TripleLinkingTensor(m, [(tp.type, tp.sign) for tp in points])


def tlk_from_sequence(seq: TransformationSequence, pair=None) -> tuple[TripleLinkingTensor, int]:
    """Signed per-type sums of the triple points of ``seq`` and its ``r3`` count.

    If ``pair`` (a :class:`~torustlk.pairs.CommutingPair`) is given, ``seq``
    must run from ``a b`` to ``b a`` letter for letter.
    """
    if pair is not None:
        if seq.start.letters != pair.product().letters:
            raise SequenceError(f"sequence starts at [{seq.start}], expected a*b = [{pair.product()}]")
        target = pair.swapped_product()
    else:
        target = None
    report = validate_sequence(seq, target)
    report.raise_if_invalid()
    points = triple_points(seq)
    return tensor_from_points(seq.m, points), len(points)
