"""Command-line frontend.

Every library operation is exposed as a subcommand so results can be
scripted and the acceptance checks reproduced from a shell.  Field
elements cross the boundary as integer encodings; every invocation
prints a header line naming the field and its reduction modulus so the
output is self-describing.

Exit codes: 0 success, 1 usage or input error, 2 feasibility-guard
violation, 3 selftest disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codec import LineCode, code_params
from .gf import GF
from .geometry import num_lines, num_points
from .line_enum import count_lines_with_prefix, line_rank, line_unrank
from .oracle import GuardError, generator_matrix, selftest
from .point_enum import count_points_with_prefix, point_rank, point_unrank

EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_SELFTEST = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_vector(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",")
                     if x != "")
    except ValueError:
        raise ValueError(f"malformed vector {text!r}")


def _parse_matrix(text: str) -> tuple[tuple, tuple]:
    rows = [r for r in text.split(";") if r.strip() != ""]
    if len(rows) != 2:
        raise ValueError("matrix must have exactly two ';'-separated rows")
    A, B = (_parse_vector(r) for r in rows)
    if len(A) != len(B):
        raise ValueError("matrix rows have unequal length")
    return A, B


def _read_elements(path: str) -> list[int]:
    """One encoding per line, or a single comma-separated row."""
    with open(path, encoding="utf-8") as fh:
        content = fh.read()
    lines = [ln.strip() for ln in content.splitlines() if ln.strip()]
    if len(lines) == 1 and "," in lines[0]:
        return list(_parse_vector(lines[0]))
    return [int(ln) for ln in lines]


def _emit(args, plain: str, record: dict) -> None:
    if args.format == "structured":
        print(json.dumps(record, sort_keys=True))
    else:
        print(plain)


def _header(args, F: GF) -> None:
    mod = ",".join(str(c) for c in F.modulus)
    if args.format == "structured":
        print(json.dumps({"field": {"p": F.p, "e": F.e, "order": F.order,
                                    "modulus": mod}}, sort_keys=True))
    else:
        print(f"# field p={F.p} e={F.e} order={F.order} modulus={mod}")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="hermgrass",
                  description="Hermitian polar space enumeration and "
                              "line Grassmann codes")
    top.add_argument("--p", type=int, default=2, help="field characteristic")
    top.add_argument("--e", type=int, default=1,
                     help="extension degree: the subfield is GF(p^e)")
    top.add_argument("--m", type=int, required=True, help="vector dimension")
    top.add_argument("--modulus",
                     help="reduction modulus coefficients, low degree first")
    top.add_argument("--format", choices=("plain", "structured"),
                     default="plain")
    top.add_argument("--force", action="store_true",
                     help="override feasibility guards")
    sub = top.add_subparsers(dest="command", required=True)

    sub.add_parser("params", help="code and geometry parameters")

    s = sub.add_parser("rank-point", help="rank of a normalized point")
    s.add_argument("--vector", required=True)
    s = sub.add_parser("unrank-point", help="point with a given rank")
    s.add_argument("--index", type=int, required=True)
    s = sub.add_parser("rank-line", help="rank of an RREF line")
    s.add_argument("--matrix", required=True,
                   help="two ';'-separated comma rows")
    s = sub.add_parser("unrank-line", help="line with a given rank")
    s.add_argument("--index", type=int, required=True)

    s = sub.add_parser("count-prefix", help="completions of a prefix")
    s.add_argument("--kind", choices=("point", "line"), required=True)
    s.add_argument("--prefix", required=True,
                   help="comma vector (point) or two ';' rows (line); "
                        "empty string for the empty prefix")

    s = sub.add_parser("encode", help="full codeword of a message")
    s.add_argument("--message-file", required=True)
    s = sub.add_parser("component", help="single codeword component")
    s.add_argument("--message-file", required=True)
    s.add_argument("--index", type=int, required=True,
                   help="1-based component index")
    s = sub.add_parser("decode", help="message of a clean codeword")
    s.add_argument("--codeword-file", required=True)
    s = sub.add_parser("correct", help="majority-vote component repair")
    s.add_argument("--received-file", required=True)
    s.add_argument("--indices", help="comma list of 1-based components; "
                                     "default: all")

    sub.add_parser("gen-matrix", help="explicit generator matrix")

    s = sub.add_parser("selftest", help="oracle agreement suites")
    s.add_argument("--level", choices=("fast", "full"), default="fast")
    return top


def _run(args) -> int:
    modulus = _parse_vector(args.modulus) if args.modulus else None
    F = GF(args.p, args.e, modulus=modulus)
    m = args.m
    if m < 2:
        raise ValueError("m must be at least 2")
    _header(args, F)

    if args.command == "params":
        cp = code_params(m, F.q)
        _emit(args,
              f"N={cp.n} K={cp.k} dmin={cp.d_min} "
              f"points={cp.n_points} lines={cp.n_lines}",
              {"N": cp.n, "K": cp.k, "d_min": cp.d_min,
               "points": cp.n_points, "lines": cp.n_lines})
    elif args.command == "rank-point":
        r = point_rank(F, m, _parse_vector(args.vector))
        _emit(args, str(r), {"rank": r})
    elif args.command == "unrank-point":
        X = point_unrank(F, m, args.index)
        _emit(args, ",".join(map(str, X)), {"vector": list(X)})
    elif args.command == "rank-line":
        r = line_rank(F, m, *_parse_matrix(args.matrix))
        _emit(args, str(r), {"rank": r})
    elif args.command == "unrank-line":
        A, B = line_unrank(F, m, args.index)
        _emit(args,
              ",".join(map(str, A)) + ";" + ",".join(map(str, B)),
              {"matrix": [list(A), list(B)]})
    elif args.command == "count-prefix":
        if args.kind == "point":
            n = count_points_with_prefix(F, m, _parse_vector(args.prefix))
        elif ";" in args.prefix:
            n = count_lines_with_prefix(F, m, *_parse_matrix(args.prefix))
        else:
            pre = _parse_vector(args.prefix)
            if pre:
                raise ValueError("line prefix needs two ';'-separated rows")
            n = count_lines_with_prefix(F, m, (), ())
        _emit(args, str(n), {"count": n})
    elif args.command == "encode":
        code = LineCode(F, m)
        cw = code.encode(_read_elements(args.message_file))
        _emit(args, "\n".join(map(str, cw)), {"codeword": cw})
    elif args.command == "component":
        code = LineCode(F, m)
        v = code.eval_component(_read_elements(args.message_file), args.index)
        _emit(args, str(v), {"component": args.index, "value": v})
    elif args.command == "decode":
        code = LineCode(F, m)
        w = code.decode(_read_elements(args.codeword_file))
        _emit(args, "\n".join(map(str, w)), {"message": w})
    elif args.command == "correct":
        code = LineCode(F, m)
        received = _read_elements(args.received_file)
        indices = ([int(x) for x in _parse_vector(args.indices)]
                   if args.indices else None)
        out = code.correct(received, indices)
        _emit(args,
              "\n".join(f"{i} {v}" for i, v in sorted(out.items())),
              {"corrected": {str(i): v for i, v in sorted(out.items())}})
    elif args.command == "gen-matrix":
        rows = generator_matrix(F, m)
        _emit(args, "\n".join(",".join(map(str, r)) for r in rows),
              {"matrix": rows})
    elif args.command == "selftest":
        reports = selftest(args.level)
        bad = 0
        for rep in reports:
            if args.format == "structured":
                print(json.dumps({"quantity": rep.quantity, "q": rep.q,
                                  "m": rep.m, "agree": rep.agree},
                                 sort_keys=True))
            else:
                print(rep)
            bad += not rep.agree
        if bad:
            return EXIT_SELFTEST
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except GuardError as exc:
        print(f"guard violation: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
