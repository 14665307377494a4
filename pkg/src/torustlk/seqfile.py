"""JSON Lines encoding of transformation sequences.

Line 0 is a header ``{"m": ..., "start": [...]}``, optionally followed by
``"target"``, ``"provenance"`` and ``"r3_count"``.  Every further line is one
move: ``{"step", "kind", "pos", "params", "word_after"}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .braid import BraidWord
from .errors import BraidError, MoveError, WordParseError
from .rewriting import KINDS, Move, TransformationSequence, apply_move


def canonical_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def dump_sequence(seq: TransformationSequence, target: Optional[BraidWord] = None,
                  meta: Optional[dict] = None) -> str:
    header: dict = {"m": seq.m, "start": seq.start.to_ints()}
    if target is not None:
        header["target"] = target.to_ints()
    for key, value in (meta or {}).items():
        header[key] = value
    lines = [canonical_json(header)]
    word = seq.start
    for step, move in enumerate(seq.moves, start=1):
        word = apply_move(word, move)
        lines.append(canonical_json({
            "step": step,
            "kind": move.kind,
            "pos": move.pos,
            "params": move.params,
            "word_after": word.to_ints(),
        }))
    return "\n".join(lines) + "\n"


@dataclass
class SequenceFile:
    seq: TransformationSequence
    word_after: list[BraidWord]
    target: Optional[BraidWord] = None
    meta: dict = field(default_factory=dict)


def _int_list(obj, what: str, line: int) -> list[int]:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise WordParseError(f"line {line}: {what} must be a list of integers")
    return obj


def load_sequence(text: str) -> SequenceFile:
    """Parse the JSON Lines format. Structural problems raise :class:`WordParseError`.

    Whether the moves actually apply, and reproduce ``word_after``, is left
    to :func:`~torustlk.rewriting.validate_sequence`.
    """
    rows = []
    for n, raw in enumerate(text.splitlines()):
        if not raw.strip():
            continue
        try:
            rows.append((n, json.loads(raw)))
        except json.JSONDecodeError as exc:
            raise WordParseError(f"line {n}: invalid JSON ({exc.msg})") from None
    if not rows:
        raise WordParseError("empty sequence file")

    line, header = rows[0]
    if not isinstance(header, dict) or "m" not in header or "start" not in header:
        raise WordParseError(f"line {line}: header needs 'm' and 'start'")
    m = header["m"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise WordParseError(f"line {line}: 'm' must be an integer")
    try:
        start = BraidWord.from_ints(m, _int_list(header["start"], "start", line))
        target = None
        if "target" in header:
            target = BraidWord.from_ints(m, _int_list(header["target"], "target", line))
    except BraidError as exc:
        raise WordParseError(f"line {line}: {exc}") from None
    meta = {k: v for k, v in header.items() if k not in ("m", "start", "target")}

    moves, after = [], []
    for expected_step, (line, row) in enumerate(rows[1:], start=1):
        if not isinstance(row, dict):
            raise WordParseError(f"line {line}: a move must be a JSON object")
        missing = {"step", "kind", "pos", "params", "word_after"} - row.keys()
        if missing:
            raise WordParseError(f"line {line}: missing fields {sorted(missing)}")
        if row["step"] != expected_step:
            raise WordParseError(f"line {line}: step {row['step']} out of order (expected {expected_step})")
        if row["kind"] not in KINDS:
            raise WordParseError(f"line {line}: unknown move kind {row['kind']!r}")
        if not isinstance(row["pos"], int) or isinstance(row["pos"], bool):
            raise WordParseError(f"line {line}: 'pos' must be an integer")
        params = row["params"]
        if not isinstance(params, dict):
            raise WordParseError(f"line {line}: 'params' must be an object")
        try:
            if row["kind"] == "insert":
                index = params.get("index")
                if not isinstance(index, int) or isinstance(index, bool):
                    raise MoveError("insert needs an integer 'index'")
                moves.append(Move.insert(row["pos"], params.get("index"), params.get("order")))
            else:
                if params:
                    raise MoveError(f"{row['kind']} takes no params")
                moves.append(Move(row["kind"], row["pos"]))
            after.append(BraidWord.from_ints(m, _int_list(row["word_after"], "word_after", line)))
        except BraidError as exc:
            raise WordParseError(f"line {line}: {exc}") from None
    return SequenceFile(TransformationSequence(start, tuple(moves)), after, target, meta)
