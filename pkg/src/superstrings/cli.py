"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification failure
(including a hunt ratio above 2), 3 instance above a solver size bound.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from superstrings.errors import InstanceTooLarge, SuperstringError
from superstrings.exact import exact_circular, exact_linear
from superstrings.greedy import TiePolicy, greedy_circular, greedy_linear
from superstrings.harness import SCS, SLS, GenConfig, gen_instance, hunt, hunt_exhaustive, verify
from superstrings.reduction import canonical_linearization, f_reduce, g_extract
from superstrings.strings import BARRED, BASE, CircularString, InstanceSet, normalize, restrict

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_instance(path: str) -> InstanceSet:
    """Parse an instance file: one lowercase string per line, ``#`` comments."""
    raw = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if not (text.isascii() and text.isalpha() and text.islower()):
                raise UsageError(f"{path}:{lineno}: expected lowercase a-z only, got {text!r}")
            raw.append(text)
    if not raw:
        raise UsageError(f"{path}: no strings found")
    return normalize(raw)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_solve(args) -> int:
    P = read_instance(args.file)
    if args.algo == "exact":
        res = exact_linear(P) if args.problem == "sls" else exact_circular(P)
        _emit({"problem": args.problem.upper(), "algo": "exact", **res.to_json()})
        return EXIT_OK
    tie = TiePolicy.lex() if args.tie == "lex" else TiePolicy.random(args.seed)
    if args.problem == "sls":
        result, trace = greedy_linear(P, tie)
        text = result
    else:
        circ, trace = greedy_circular(P, tie)
        text = circ.canonical
    _emit(
        {
            "problem": args.problem.upper(),
            "algo": "greedy",
            "tie_policy": str(tie),
            "length": len(text),
            "string_or_rotation": text,
            "trace": trace.to_json(),
            "absorbed": trace.absorbed,
        }
    )
    return EXIT_OK


def cmd_reduce(args) -> int:
    r = f_reduce(read_instance(args.file))
    _emit(
        {
            "original": list(r.original.strings),
            "doubled": list(r.doubled.strings),
            "total_length": r.doubled.total_length,
        }
    )
    return EXIT_OK


def cmd_extract(args) -> int:
    text = args.circular
    if not (text.isascii() and text.isalpha()):
        raise UsageError(f"circular string must use letters a-z / A-Z, got {text!r}")
    c = CircularString(text)
    lc = canonical_linearization(c)
    _emit(
        {
            "circular": c.canonical,
            "linearization": lc,
            "base_restriction": restrict(lc, BASE),
            "barred_restriction": restrict(lc, BARRED),
            "g": g_extract(c),
        }
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify(read_instance(args.file))
    _emit(report)
    if not report["passed"]:
        return EXIT_VERIFY
    return EXIT_OK if report["complete"] else EXIT_CAPACITY


def cmd_hunt(args) -> int:
    problem = args.problem.upper()
    if args.exhaustive:
        report = hunt_exhaustive(
            args.alphabet, args.strings, args.min_len, args.max_len, problem, args.seed, args.random_ties
        )
    else:
        cfg = GenConfig(args.alphabet, args.strings, args.min_len, args.max_len, args.seed)
        report = hunt(cfg, args.samples, problem, args.random_ties)
    report.write_jsonl(args.out)
    summary = report.summary()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    _emit(summary)
    if not report.bound_ok:
        ratio = summary["max_ratio"]
        sys.stderr.write(f"greedy/optimal ratio {ratio['num']}/{ratio['den']} exceeds 2 on {summary['argmax']['instance']}\n")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = GenConfig(args.alphabet, args.strings, args.min_len, args.max_len, args.seed)
    text = "".join(w + "\n" for w in gen_instance(cfg))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _gen_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alphabet", type=int, default=2, help="number of base letters (1-26)")
    p.add_argument("--strings", type=int, default=3, help="strings per instance (before normalization)")
    p.add_argument("--min-len", type=int, default=1)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superstrings", description="Greedy and exact shortest linear/circular superstrings.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--problem", choices=["sls", "scs"], required=True)
    p.add_argument("--algo", choices=["greedy", "exact"], required=True)
    p.add_argument("--tie", choices=["lex", "rand"], default="lex")
    p.add_argument("--seed", type=int, default=0, help="seed for --tie rand")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="emit the instance together with its barred copy")
    p.add_argument("file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("extract", help="map a circular string (uppercase = barred) back to a linear one")
    p.add_argument("--circular", required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="check every reduction property on an instance file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", help="search for instances with a large greedy/optimal ratio")
    _gen_options(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--problem", choices=["sls", "scs"], default="scs")
    p.add_argument("--exhaustive", action="store_true", help="enumerate every instance instead of sampling")
    p.add_argument("--random-ties", type=int, default=3, help="seeded random tie policies per instance")
    p.add_argument("--out", required=True, help="JSONL file the records are appended to")
    p.add_argument("--report", help="also write the summary JSON here")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("gen", help="emit a random instance file")
    _gen_options(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAPACITY
    except (UsageError, SuperstringError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
