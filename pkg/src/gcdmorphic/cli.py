"""Command-line front door wiring the library into shell pipelines.

Wire format: UTF-8 text, one decimal integer per line, line 1 = index 1.
Blank lines and lines starting with ``#`` are ignored. ``--json`` switches
sequence output to a single object ``{"role": ..., "values": [...]}`` whose
values are decimal strings, so integers beyond 2^53 survive every consumer.

Exit codes:
    0   success / check passed
    1   check failed (witness JSON on stdout)
    2   encode failure (diagnostic JSON on stderr)
    64  usage error
    65  malformed input (non-integer token, zero, negative, empty stream)
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .catalog import PARAMETERIZED_FORMS, UnknownName, emit, entries
from .codec import EncodeFailure, decode, encode
from .core import CodePrefix, SeqPrefix, first_primes
from .generator import (
    MAX_SEED,
    RNG_ALGORITHM,
    GenParams,
    PoolExhausted,
    corrupt,
    generate,
)
from .validator import C1Witness, MorphicWitness, certify, check_c1, check_gcd_morphic

EX_OK = 0
EX_CHECK_FAILED = 1
EX_ENCODE_FAILED = 2
EX_USAGE = 64
EX_DATAERR = 65

_COMPACT = {"separators": (",", ":")}


class UsageError(Exception):
    pass


class MalformedInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits the process on bad args; raise instead so main() owns
    # the exit code (64) and streams.
    def error(self, message: str):  # noqa: D102
        raise UsageError(message)


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _seed(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from None
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {value}")
    return value


def _read_values(stream: TextIO) -> list[int]:
    values: list[int] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not (line.isascii() and line.isdigit()):
            raise MalformedInput(f"line {lineno}: not a decimal integer: {line!r}")
        value = int(line)
        if value < 1:
            raise MalformedInput(f"line {lineno}: values must be >= 1, got {value}")
        values.append(value)
    if not values:
        raise MalformedInput("input is empty: need at least one value")
    return values


def _write_values(values: Sequence[int], role: str, as_json: bool, out: TextIO) -> None:
    if as_json:
        payload = {"role": role, "values": [str(v) for v in values]}
        print(json.dumps(payload, **_COMPACT), file=out)
    else:
        out.write("\n".join(str(v) for v in values) + "\n")


def _witness_json(w: C1Witness | MorphicWitness | EncodeFailure) -> str:
    if isinstance(w, C1Witness):
        payload = {"kind": "c1", "n": w.n, "k": w.k, "g": str(w.g)}
    elif isinstance(w, MorphicWitness):
        payload = {
            "kind": "morphic",
            "n": w.n,
            "m": w.m,
            "got": str(w.got),
            "expected": str(w.expected),
        }
    else:
        payload = {
            "kind": "encode",
            "n": w.index,
            "numerator": str(w.numerator),
            "denominator": str(w.denominator),
        }
    return json.dumps(payload, **_COMPACT)


_OK_LINE = json.dumps({"ok": True}, **_COMPACT)


def _cmd_encode(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    f = SeqPrefix(tuple(_read_values(stdin)))
    try:
        code = encode(f)
    except EncodeFailure as exc:
        print(_witness_json(exc), file=stderr)
        return EX_ENCODE_FAILED
    _write_values(code.codes, "code", args.json, stdout)
    return EX_OK


def _cmd_decode(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    c = CodePrefix(tuple(_read_values(stdin)))
    _write_values(decode(c).terms, "sequence", args.json, stdout)
    return EX_OK


def _cmd_check_c1(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    w = check_c1(CodePrefix(tuple(_read_values(stdin))))
    if w is None:
        print(_OK_LINE, file=stdout)
        return EX_OK
    print(_witness_json(w), file=stdout)
    return EX_CHECK_FAILED


def _cmd_check_morphic(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    w = check_gcd_morphic(SeqPrefix(tuple(_read_values(stdin))))
    if w is None:
        print(_OK_LINE, file=stdout)
        return EX_OK
    print(_witness_json(w), file=stdout)
    return EX_CHECK_FAILED


def _cmd_check_certify(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    cert = certify(SeqPrefix(tuple(_read_values(stdin))))
    if not cert.consistent:
        raise AssertionError("validator routes disagree; this is a bug")
    if cert.ok:
        print(_OK_LINE, file=stdout)
        return EX_OK
    # consistency guarantees a brute-force witness whenever certification fails
    print(_witness_json(cert.morphic_witness), file=stdout)
    return EX_CHECK_FAILED


def _cmd_gen(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    try:
        params = GenParams(
            length=args.length,
            seed=args.seed,
            prime_pool=first_primes(args.primes),
            chains=args.chains,
            max_exponent=args.max_exp,
        )
        code = generate(params)
    except (PoolExhausted, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if not args.json:
        stdout.write(f"# rng={RNG_ALGORITHM} seed={args.seed}\n")
    _write_values(code.codes, "code", args.json, stdout)
    return EX_OK


def _cmd_corrupt(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    c = CodePrefix(tuple(_read_values(stdin)))
    try:
        out = corrupt(c, args.seed)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    _write_values(out.codes, "code", args.json, stdout)
    return EX_OK


def _cmd_catalog_list(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    rows = [(e.name, e.expected_morphic, e.description) for e in entries()]
    rows += [(name, morphic, desc) for name, desc, morphic in PARAMETERIZED_FORMS]
    width = max(len(name) for name, _, _ in rows)
    for name, morphic, desc in rows:
        flag = "morphic" if morphic else "not-morphic"
        stdout.write(f"{name:<{width}}  {flag:<11}  {desc}\n")
    return EX_OK


def _cmd_catalog_emit(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    try:
        f = emit(args.name, args.length)
    except UnknownName as exc:
        raise UsageError(f"unknown catalog name: {exc.args[0]}") from exc
    _write_values(f.terms, "sequence", args.json, stdout)
    return EX_OK


def _add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--json",
        action="store_true",
        help="emit one JSON object with string-encoded values instead of lines",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gcdmorphic",
        description="encode/decode GCD-morphic sequences, check them, generate codes",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("encode", help="read a sequence on stdin, write its code")
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("decode", help="read a code on stdin, write its sequence")
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_decode)

    p = sub.add_parser("check", help="validate stdin; exit 0 on pass, 1 with a witness")
    what = p.add_subparsers(dest="target", metavar="WHAT", required=True)
    q = what.add_parser("c1", help="coprimality condition on a code")
    q.set_defaults(handler=_cmd_check_c1)
    q = what.add_parser("morphic", help="brute-force GCD-morphic check on a sequence")
    q.set_defaults(handler=_cmd_check_morphic)
    q = what.add_parser("certify", help="encode + c1 + brute force on a sequence")
    q.set_defaults(handler=_cmd_check_certify)

    p = sub.add_parser("gen", help="write a code that passes the c1 check")
    p.add_argument("--length", type=_positive_int, required=True, metavar="L")
    p.add_argument("--seed", type=_seed, required=True, metavar="S")
    p.add_argument("--primes", type=_positive_int, default=20, metavar="K",
                   help="draw from the first K primes (default 20)")
    p.add_argument("--chains", type=_positive_int, default=10, metavar="C",
                   help="number of prime-assignment rounds (default 10)")
    p.add_argument("--max-exp", type=_positive_int, default=2, metavar="E",
                   help="cap on prime-power exponents (default 2)")
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("corrupt", help="read a code, break its coprimality condition")
    p.add_argument("--seed", type=_seed, required=True, metavar="S")
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_corrupt)

    p = sub.add_parser("catalog", help="named reference sequences")
    cat = p.add_subparsers(dest="action", metavar="ACTION", required=True)
    q = cat.add_parser("list", help="list entry names and parameterized forms")
    q.set_defaults(handler=_cmd_catalog_list)
    q = cat.add_parser("emit", help="write a prefix of the named sequence")
    q.add_argument("name", metavar="NAME")
    q.add_argument("--length", type=_positive_int, required=True, metavar="L")
    _add_json_flag(q)
    q.set_defaults(handler=_cmd_catalog_emit)

    return parser


def main(
    argv: Sequence[str] | None = None,
    *,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args, stdin, stdout, stderr)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EX_USAGE
    except MalformedInput as exc:
        print(f"error: {exc}", file=stderr)
        return EX_DATAERR
    except SystemExit as exc:  # argparse --help
        return exc.code if isinstance(exc.code, int) else EX_OK
    except BrokenPipeError:
        return EX_OK


if __name__ == "__main__":
    sys.exit(main())
