"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 precondition violated, 4 braids do not
commute, 5 formula and sequence disagree, 6 invalid sequence.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .braid import BraidWord, full_twist, parse_word
from .constructions import (
    SequenceBundle,
    seq_b_delta_n,
    seq_sigma_past_delta,
    seq_slide,
    seq_structured3,
    seq_wrap,
)
from .errors import (
    InvariantViolation,
    NotCommutingError,
    PreconditionError,
    SequenceError,
    WordParseError,
)
from .invariants import thm2_bound, tlk_formula
from .linking import linking_matrix
from .pairs import CommutingPair, StructuredPair3
from .rewriting import tensor_from_points, triple_points, validate_sequence
from .seqfile import dump_sequence, load_sequence

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NOT_COMMUTING = 4
EXIT_DISAGREE = 5
EXIT_INVALID_SEQUENCE = 6


class _Done(Exception):
    """Carries the rendered output and the exit code of a command."""

    def __init__(self, code: int, payload=None, text: Optional[str] = None):
        self.code = code
        self.payload = payload
        self.text = text


def _render(payload, pretty: bool) -> str:
    if pretty:
        return json.dumps(payload, indent=2) + "\n"
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _word(args, attr: str) -> BraidWord:
    return parse_word(getattr(args, attr), args.m)


def _need_m3(m: int) -> None:
    if m < 3:
        raise PreconditionError(f"need m >= 3, got {m}")


def cmd_lk(args) -> _Done:
    return _Done(EXIT_OK, linking_matrix(_word(args, "word")).to_json())


def cmd_tlk(args) -> _Done:
    _need_m3(args.m)
    pair = CommutingPair(_word(args, "a"), _word(args, "b"))
    return _Done(EXIT_OK, tlk_formula(pair).to_json())


def _write_emit(path: Optional[str], bundle: SequenceBundle) -> None:
    if path:
        Path(path).write_text(dump_sequence(bundle.seq, bundle.target, bundle.metadata()))


def cmd_oracle(args) -> _Done:
    _need_m3(args.m)
    b = _word(args, "b")
    if args.n < 0:
        raise PreconditionError(f"n must be non-negative, got {args.n}")
    formula = tlk_formula(CommutingPair(b, full_twist(args.m, args.n)))
    bundle = seq_b_delta_n(b, args.n)
    if bundle.tensor is None:
        raise PreconditionError(f"b = [{b}] is not a pure braid")
    payload = {
        "verdict": "agree" if bundle.tensor == formula else "disagree",
        "m": args.m,
        "n": args.n,
        "b": b.to_ints(),
        "r3_count": bundle.r3_count,
        "formula": formula.to_json(),
        "sequence": bundle.tensor.to_json(),
    }
    try:
        report = thm2_bound(b, args.n)
        report.realized_r3_count = bundle.r3_count
        payload["bound"] = report.to_json()
    except InvariantViolation as exc:
        payload["verdict"] = "disagree"
        payload["bound"] = {"error": str(exc)}
    if args.audit:
        payload["audit"] = validate_sequence(bundle.seq, bundle.target, audit=True).valid
    _write_emit(args.emit, bundle)
    if payload.get("audit") is False:
        return _Done(EXIT_INVALID_SEQUENCE, payload)
    return _Done(EXIT_OK if payload["verdict"] == "agree" else EXIT_DISAGREE, payload)


def cmd_bound(args) -> _Done:
    b = _word(args, "b")
    try:
        report = thm2_bound(b, args.n)
    except InvariantViolation as exc:
        raise _Done(EXIT_DISAGREE, text=str(exc)) from None
    return _Done(EXIT_OK, report.to_json())


def cmd_verify(args) -> _Done:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise WordParseError(f"cannot read {args.file}: {exc.strerror}") from None
    loaded = load_sequence(text)
    seq = loaded.seq
    report = validate_sequence(seq, loaded.target, audit=args.audit, expected_words=loaded.word_after)
    steps = []
    for st in report.steps:
        row = {"step": st.step, "kind": st.move.kind, "pos": st.move.pos, "ok": st.ok}
        if st.error:
            row["error"] = st.error
        if st.braid_equal is not None:
            row["braid_equal"] = st.braid_equal
        steps.append(row)
    payload = {
        "valid": report.valid,
        "m": seq.m,
        "moves": len(seq.moves),
        "endpoint_ok": report.endpoint_ok,
        "target": loaded.target.to_ints() if loaded.target is not None else None,
        "final_word": report.final_word.to_ints() if report.final_word is not None else None,
        "audit": report.audit,
        "errors": report.errors,
        "steps": steps,
    }
    if report.replayed:
        points = triple_points(seq)
        payload["r3_count"] = len(points)
        payload["triple_points"] = [tp.to_json() for tp in points]
        payload["tensor"] = tensor_from_points(seq.m, points).to_json()
    return _Done(EXIT_OK if report.valid else EXIT_INVALID_SEQUENCE, payload)


def _build_bundle(args) -> SequenceBundle:
    if args.builder == "b-delta":
        if args.n is None:
            raise PreconditionError("b-delta needs --n")
        return seq_b_delta_n(_word(args, "b"), args.n)
    if args.builder == "structured":
        return seq_structured3(StructuredPair3(parse_word(args.w, 3), args.k1, args.l1, args.k2, args.l2))
    if args.builder == "slide":
        if args.j is None:
            raise PreconditionError("slide needs --j")
        return seq_slide(args.j, args.m)
    if args.builder == "wrap":
        return seq_wrap(args.m)
    if args.i is None:
        raise PreconditionError("sigma needs --i")
    return seq_sigma_past_delta(args.i, args.sign, args.m)


def cmd_sequence(args) -> _Done:
    bundle = _build_bundle(args)
    if args.audit and not validate_sequence(bundle.seq, bundle.target, audit=True).valid:
        raise SequenceError(f"{bundle.provenance} failed the audit")
    text = dump_sequence(bundle.seq, bundle.target, bundle.metadata())
    if args.emit:
        Path(args.emit).write_text(text)
        return _Done(EXIT_OK, {"emitted": args.emit, **bundle.metadata(), "moves": len(bundle.seq.moves)})
    return _Done(EXIT_OK, text=text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact canonical JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)

    parser = argparse.ArgumentParser(
        prog="torustlk",
        description="Triple linking numbers of torus-covering T^2-links from commuting pure braids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lk", parents=[common], help="linking matrix of a pure braid closure")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_lk)

    p = sub.add_parser("tlk", parents=[common], help="triple linking numbers of a commuting pair")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_tlk)

    p = sub.add_parser("oracle", parents=[common], help="compare formula and rewriting sequence for (b, D^n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", metavar="PATH", help="also write the sequence as JSON Lines")
    p.add_argument("--audit", action="store_true", help="check every step is braid-equal to the start")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bound", parents=[common], help="triple point lower bound for (b, D^n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", parents=[common], help="replay and check a JSON Lines sequence file")
    p.add_argument("file")
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", parents=[common], help="emit a constructed sequence as JSON Lines")
    p.add_argument("--builder", choices=["b-delta", "structured", "slide", "wrap", "sigma"], default="b-delta")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--b", default="")
    p.add_argument("--n", type=int)
    p.add_argument("--w", default="", help="structured: the word w on 3 strands")
    for name in ("k1", "l1", "k2", "l2"):
        p.add_argument(f"--{name}", type=int, default=0)
    p.add_argument("--j", type=int, help="slide: generator index")
    p.add_argument("--i", type=int, help="sigma: generator index")
    p.add_argument("--sign", type=int, choices=[1, -1], default=1)
    p.add_argument("--emit", metavar="PATH")
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        done = args.func(args)
    except _Done as exc:
        done = exc
    except WordParseError as exc:
        done = _Done(EXIT_PARSE, text=f"parse error: {exc}")
    except PreconditionError as exc:
        done = _Done(EXIT_PRECONDITION, text=f"precondition violated: {exc}")
    except NotCommutingError as exc:
        done = _Done(EXIT_NOT_COMMUTING, text=f"not commuting: {exc}")
    except SequenceError as exc:
        done = _Done(EXIT_INVALID_SEQUENCE, text=f"invalid sequence: {exc}")

    if done.payload is not None:
        sys.stdout.write(_render(done.payload, args.pretty))
    elif done.code == EXIT_OK:
        sys.stdout.write(done.text or "")
    else:
        sys.stderr.write((done.text or "error") + "\n")
    return done.code


if __name__ == "__main__":
    sys.exit(main())
