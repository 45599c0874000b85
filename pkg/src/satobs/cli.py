"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 consistency error (bad user data,
inadmissible q, hypotheses of an operation not met).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus as corpus_mod
from .cobordism import HypothesisViolation, InadmissibleLink, reduce_to_hopf
from .covering import LiftConsistencyError, WindingNotDivisible
from .diagram import WordError, parse_word
from .dinv import d_lens, d_surgery_pm1_alternating, zk_bound
from .pipeline import InconsistentCoverData, NotNullHomologous, PreconditionError
from .report import (
    ReportFormatError,
    bound_to_dict,
    certificate_json,
    cover_data_from_dict,
    emit,
    emit_many,
    jsonable,
    render_text,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONSISTENCY = 3


class ParseError(ValueError):
    pass


PARSE_ERRORS = (ParseError, WordError, ReportFormatError, json.JSONDecodeError)
CONSISTENCY_ERRORS = (
    InconsistentCoverData,
    WindingNotDivisible,
    LiftConsistencyError,
    PreconditionError,
    NotNullHomologous,
    InadmissibleLink,
    HypothesisViolation,
)


# -- input files ---------------------------------------------------------------------

def load_pattern(spec: str) -> corpus_mod.Pattern:
    """``builtin:NAME`` or a path to a JSON pattern file."""
    if spec.startswith("builtin:"):
        name = spec[len("builtin:"):]
        pats = corpus_mod.builtin_patterns()
        if name not in pats:
            raise ParseError(f"no built-in pattern {name!r}; have {', '.join(sorted(pats))}")
        return pats[name]
    try:
        text = Path(spec).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {spec}: {e.strerror}") from e
    return pattern_from_json(text, default_name=Path(spec).stem)


def pattern_from_json(text: str, default_name: str = "pattern") -> corpus_mod.Pattern:
    d = json.loads(text)
    if not isinstance(d, dict) or "word" not in d:
        raise ParseError("pattern file must be a JSON object with a 'word' field")
    word = parse_word(d["word"])
    slice_decl = d.get("declared_slice_unknot", True)
    if not isinstance(slice_decl, bool):
        raise ParseError("declared_slice_unknot must be true or false")
    blocks = {}
    for key, block in (d.get("cover_data") or {}).items():
        try:
            q = int(key)
        except ValueError as e:
            raise ParseError(f"cover_data keys must be integers, got {key!r}") from e
        cd = cover_data_from_dict(block, q)
        if cd.q != q:
            raise InconsistentCoverData(f"cover_data block {key} declares q = {cd.q}")
        blocks[q] = cd.validate()
    inner = None
    if d.get("compose_with"):
        inner = corpus_mod.Pattern("inner", parse_word(d["compose_with"]))
    return corpus_mod.Pattern(d.get("name", default_name), word, slice_decl, blocks, inner)


def load_matrix(path: str):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    text = text.strip()
    try:
        if text.startswith("["):
            rows = json.loads(text)
        else:
            rows = [[int(x) for x in line.replace(",", " ").split()]
                    for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        rows = [[int(x) for x in r] for r in rows]
    except (ValueError, TypeError) as e:
        raise ParseError(f"bad matrix file: {e}") from e
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square and nonempty")
    return rows


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {s!r}") from e


def _number_or_symbol(s: str):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        if not s.isidentifier():
            raise argparse.ArgumentTypeError(f"{s!r} is neither a rational nor a symbol")
        return s


def _int_or_symbol(s: str):
    try:
        return int(s)
    except ValueError:
        if not s.isidentifier():
            raise argparse.ArgumentTypeError(f"{s!r} is neither an integer nor a symbol")
        return s


# -- commands ------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    pattern = load_pattern(args.file)
    report = corpus_mod.analyze(pattern, args.q, args.max_q)
    print(emit(report) if args.format == "json" else render_text(report))
    return EXIT_OK


def cmd_corpus(args) -> int:
    reports = corpus_mod.analyze_corpus(args.max_q)
    if args.format == "json":
        print(emit_many(reports))
    else:
        print("\n\n".join(render_text(r) for r in reports))
        print()
        for r in reports:
            qs = ",".join(str(e.q) for e in r.entries) or "-"
            print(f"{r.pattern:28s} w={r.winding:<3d} q={qs:8s} {r.outcome.value}")
    return EXIT_OK


def cmd_dinv(args) -> int:
    if args.kind == "lens":
        p, q = args.p, args.q
        try:
            values = [d_lens(p, q, i) for i in range(p)]
        except ValueError as e:
            raise PreconditionError(str(e)) from e
        if args.format == "json":
            print(json.dumps({"manifold": f"L({p},{q})", "d": jsonable(values)}))
        else:
            for i, v in enumerate(values):
                print(f"d(L({p},{q}), {i}) = {v}")
    elif args.kind == "surgery":
        if args.sign not in (1, -1):
            raise PreconditionError("surgery sign must be +1 or -1")
        v = d_surgery_pm1_alternating(args.sigma, args.sign)
        if args.format == "json":
            print(json.dumps({"sigma": args.sigma, "sign": args.sign, "d": str(v)}))
        else:
            print(f"d(S3_{args.sign:+d}(K)) = {v}   (K alternating, signature {args.sigma})")
    else:
        if isinstance(args.k, int) and args.k < 0:
            raise PreconditionError("k must be nonnegative")
        b = zk_bound(args.k, args.C)
        if args.format == "json":
            print(json.dumps(bound_to_dict(b)))
        else:
            print(f"d_max(Z_{b.k}) <= {b.expression}")
            print(f"obstructed for {b.threshold_expression}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    M = load_matrix(args.matrix)
    pair = tuple(args.pair) if args.pair else None
    if pair is None:
        n = len(M)
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if M[i][j] >= 1), (0, 1))
    else:
        pair = (pair[0] - 1, pair[1] - 1)  # 1-based on the command line
    cert = reduce_to_hopf(M, *pair)
    if args.format == "json":
        print(certificate_json(cert))
    else:
        print(f"initial  {cert.initial}")
        for k, (mv, m) in enumerate(zip(cert.moves, cert.replay()[1:]), 1):
            print(f"twist {k}: components {mv.i + 1},{mv.j + 1} -> {m}")
        print(f"final    {cert.final}  (H_{len(M)} at pair {pair[0] + 1},{pair[1] + 1})")
        print(f"2-handles: {cert.two_handle_count}; cobordism {cert.definiteness}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="satobs", description="Satellite-operator homomorphism obstructions")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    a = sub.add_parser("analyze", parents=[fmt], help="analyze a pattern file or builtin:NAME")
    a.add_argument("file")
    a.add_argument("--q", type=_int_list, default=None, help="comma-separated cover degrees")
    a.add_argument("--max-q", type=int, default=corpus_mod.DEFAULT_MAX_Q)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("corpus", parents=[fmt], help="analyze every built-in pattern")
    c.add_argument("--max-q", type=int, default=corpus_mod.DEFAULT_MAX_Q)
    c.set_defaults(func=cmd_corpus)

    d = sub.add_parser("dinv", help="d-invariant calculator")
    dsub = d.add_subparsers(dest="kind", required=True)
    lens = dsub.add_parser("lens", parents=[fmt])
    lens.add_argument("p", type=int)
    lens.add_argument("q", type=int)
    surg = dsub.add_parser("surgery", parents=[fmt])
    surg.add_argument("sigma", type=int)
    surg.add_argument("sign", type=int)
    zk = dsub.add_parser("zk", parents=[fmt])
    zk.add_argument("k", type=_int_or_symbol)
    zk.add_argument("C", type=_number_or_symbol)
    d.set_defaults(func=cmd_dinv)

    r = sub.add_parser("reduce", parents=[fmt], help="twist certificate for a framed linking matrix")
    r.add_argument("matrix")
    r.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"), help="1-based distinguished pair")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # usage errors exit with 2
    try:
        return args.func(args)
    except PARSE_ERRORS as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CONSISTENCY_ERRORS as e:
        print(f"consistency error: {e}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except ValueError as e:
        # remaining domain errors (e.g. a multi-component pattern curve)
        print(f"consistency error: {e}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
