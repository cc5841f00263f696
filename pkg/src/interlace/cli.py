"""Command-line entry point: ``interlace <subcommand> ...``.

Field elements a + b*sqrt(2) are passed as two tokens ``a b``, each an
integer or ``p/q``.  Exit status is 0 on success, 1 on domain errors and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from .algebra import QSqrt2, parse_rational
from .graph import format_edgelist, parse_edgelist
from .independence import NoisyOracleConfig, noisy_oracle, recover_alpha
from .interlace import (
    Specialization,
    eval_P,
    eval_q,
    independent_set_poly,
    interlace_P_poly,
    interlace_q_poly,
    specialize,
)
from .medial import medial_identity_check, parse_rotation_system
from .reductions import classification_grid, classify_P_point, classify_q_point
from .transforms import transform


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message: str) -> None:  # argparse exits 2 here
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _points(tokens: Sequence[str]) -> tuple[QSqrt2, QSqrt2]:
    a, b, c, d = tokens
    return QSqrt2.parse(a, b), QSqrt2.parse(c, d)


def _cmd_poly(args: argparse.Namespace) -> str:
    g = parse_edgelist(_read(args.input))
    if args.kind == "P":
        return str(interlace_P_poly(g))
    if args.kind == "q":
        return str(interlace_q_poly(g))
    if args.kind == "qn":
        return str(specialize(g, Specialization.VERTEX_NULLITY))
    if args.kind == "qr":
        return str(specialize(g, Specialization.VERTEX_RANK))
    return str(independent_set_poly(g))


def _cmd_eval(args: argparse.Namespace) -> str:
    g = parse_edgelist(_read(args.input))
    first, second = _points(args.point)
    if args.kind == "P":
        return str(eval_P(g, first, second))
    return str(eval_q(g, first, second))


def _cmd_transform(args: argparse.Namespace) -> str:
    g = parse_edgelist(_read(args.input))
    return format_edgelist(transform(g, args.op, args.k)).rstrip("\n")


def _cmd_classify(args: argparse.Namespace) -> str:
    if args.grid:
        return classification_grid(args.kind).rstrip("\n")
    if args.point is None:
        raise _UsageError("classify needs --point or --grid")
    first, second = _points(args.point)
    classify = classify_q_point if args.kind == "q" else classify_P_point
    return classify(first, second).line()


def _cmd_medial(args: argparse.Namespace) -> str:
    emb = parse_rotation_system(_read(args.embedding))
    return medial_identity_check(emb, args.seed).render().rstrip("\n")


def _cmd_recover(args: argparse.Namespace) -> str:
    g = parse_edgelist(_read(args.input))
    lam = QSqrt2.parse(*args.lam)
    eps = parse_rational(args.epsilon)
    cfg = NoisyOracleConfig(lam, eps, args.seed, adversarial=args.adversarial)
    oracle = (lambda h: noisy_oracle(h, cfg)) if args.noisy else None
    return recover_alpha(g, cfg, oracle).line()


def _cmd_selftest(args: argparse.Namespace) -> str:
    from .selftest import run_selftest

    lines, ok = run_selftest(args.seed)
    if not ok:
        raise _SelftestFailed("\n".join(lines))
    return "\n".join(lines)


class _UsageError(Exception):
    pass


class _SelftestFailed(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="interlace", description="Interlace polynomial toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="print a full polynomial")
    p.add_argument("--kind", choices=["q", "P", "qn", "qr", "is"], required=True)
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("eval", help="evaluate q(x,y) or P(u,x) at a point")
    p.add_argument("--kind", choices=["q", "P"], required=True)
    p.add_argument("--point", nargs=4, required=True, metavar=("A", "B", "C", "D"),
                   help="first coordinate A+B*sqrt2, second C+D*sqrt2")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("transform", help="clone, comb or cycle every vertex")
    p.add_argument("--op", choices=["clone", "comb", "cycle"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("classify", help="complexity of evaluating at a point")
    p.add_argument("--kind", choices=["q", "P"], required=True)
    p.add_argument("--point", nargs=4, metavar=("A", "B", "C", "D"))
    p.add_argument("--grid", action="store_true", help="print a text map instead")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("medial-check", help="compare q(H;2,y) with t(G;y,y)")
    p.add_argument("--embedding", required=True, help="rotation-system file")
    p.add_argument("--seed", type=int, default=None, help="shuffle Euler circuit choices")
    p.set_defaults(func=_cmd_medial)

    p = sub.add_parser("recover-alpha", help="independence number from one noisy evaluation")
    p.add_argument("--input", required=True)
    p.add_argument("--lambda", dest="lam", nargs=2, required=True, metavar=("A", "B"))
    p.add_argument("--epsilon", required=True, help="rational in (0,1), e.g. 1/2")
    p.add_argument("--seed", type=int, default=0)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--noisy", dest="noisy", action="store_true", default=True)
    mode.add_argument("--exact", dest="noisy", action="store_false")
    p.add_argument("--adversarial", action="store_true",
                   help="noise at the full allowed factor")
    p.set_defaults(func=_cmd_recover)

    p = sub.add_parser("selftest", help="run the built-in property checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"interlace: error: {exc}", file=sys.stderr)
        return 2
    except _SelftestFailed as exc:
        print(exc)
        return 1
    except (ValueError, ZeroDivisionError, ArithmeticError, RuntimeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
