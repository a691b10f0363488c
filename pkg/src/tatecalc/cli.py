"""``tatecalc`` command line: named series, Boardman transform, residues, verification.

Exit codes: 0 success, 1 verification failure or exhausted class table,
2 usage or schema error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cache import load_fgl_context, load_tate_model
from .errors import CharacteristicError, ClassTableError, TatecalcError
from .fgl import class_series, group_law
from .gradedring import PRESETS, preset
from .jsonio import (
    bivariate_to_json,
    load_moments_file,
    load_ring_file,
    load_series_file,
    poly_to_json,
    series_to_json,
)
from .tate import (
    boardman_transform,
    is_holomorphic,
    p_star_del,
    reconstruct_from_moments,
    residue_functional,
)
from .verify import CHAR0_SUITES, SUITES, run_suite

SERIES_NAMES = ("log", "logprime", "exp", "pi", "fgl")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    rings = common.add_mutually_exclusive_group()
    rings.add_argument("--ring", choices=sorted(PRESETS), help="ring preset (default mu-rational)")
    rings.add_argument("--ring-file", metavar="PATH", help="ring descriptor JSON")
    common.add_argument("--order", type=int, help="truncation order")
    common.add_argument("--format", choices=("text", "json"), default="text")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tatecalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common()

    p = sub.add_parser("series", parents=[common], help="expand a named series")
    p.add_argument("name", choices=SERIES_NAMES)

    p = sub.add_parser("boardman", parents=[common], help="apply the Boardman transform")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="series JSON")
    src.add_argument("--moments", metavar="FILE", help="moment-sequence JSON")

    p = sub.add_parser("residue", parents=[common], help="boundary functional / additive residue")
    p.add_argument("--input", metavar="FILE", required=True, help="series JSON")
    p.add_argument("--mode", choices=("functional", "residue"))

    p = sub.add_parser("verify", parents=[common], help="run an identity suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--support", type=int, default=3, help="max monomials per random coefficient")
    p.add_argument("--timings", action="store_true", help="include wall-clock duration in JSON")
    return parser


def _ring(args):
    if args.ring_file:
        return load_ring_file(args.ring_file)
    return preset(args.ring or "mu-rational")


def _explicit_ring(args):
    """Ring named on the command line, or None to take it from the input file."""
    return _ring(args) if (args.ring or args.ring_file) else None


def _order(args, default: int) -> int:
    order = default if args.order is None else args.order
    if order < 0:
        raise UsageError("--order must be nonnegative")
    return order


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------- commands

def cmd_series(args) -> int:
    ring = _ring(args)
    order = _order(args, 8)
    name = args.name
    if name in ("log", "exp", "fgl") and ring.characteristic != 0:
        raise UsageError(f"series {name!r} needs a characteristic-0 ring")
    if name == "logprime":
        s = class_series(ring, order, "u" if ring.characteristic == 0 else "w")
    elif name == "pi":
        s = load_tate_model(ring, order).pi
    elif name == "fgl":
        F = group_law(load_fgl_context(ring, order), order)
        _emit(args, F.to_text(), bivariate_to_json(F))
        return 0
    else:
        ctx = load_fgl_context(ring, max(order - 1, 0))
        s = (ctx.log if name == "log" else ctx.exp).truncate(order)
    _emit(args, s.to_text(), series_to_json(s))
    return 0


def cmd_boardman(args) -> int:
    if args.input:
        series = load_series_file(args.input, _explicit_ring(args))
        ring = series.ring
        model = load_tate_model(ring, _order(args, max(series.order, 0)), series.variable)
        result = boardman_transform(model, series)
        verdict = is_holomorphic(model, series)
        text = result.to_text() + "\n" + (
            "input holomorphic" if verdict else f"input not holomorphic (witness: {verdict.witness})")
        payload = {"result": series_to_json(result), "input_holomorphic": verdict.holomorphic,
                   "witness": verdict.witness}
    else:
        moments = load_moments_file(args.moments, _explicit_ring(args))
        model = load_tate_model(moments.ring, _order(args, len(moments) - 1))
        result = reconstruct_from_moments(model, moments)
        text = result.to_text()
        payload = {"result": series_to_json(result)}
    _emit(args, text, payload)
    return 0


def cmd_residue(args) -> int:
    series = load_series_file(args.input, _explicit_ring(args))
    ring = series.ring
    if args.mode == "residue" and ring.characteristic != 0:
        raise UsageError("mode 'residue' needs the characteristic-0 ring")
    model = load_tate_model(ring, _order(args, max(series.order, 0)), series.variable)
    values = {}
    if args.mode in (None, "functional"):
        values["functional"] = p_star_del(model, series)
    if args.mode == "residue" or (args.mode is None and ring.characteristic == 0):
        values["residue"] = residue_functional(model, series)
    distinct = {str(v) for v in values.values()}
    agree = len(distinct) == 1
    if agree:
        text = distinct.pop()
        if len(values) == 2:
            text += "\nfunctional and residue agree"
    else:
        text = "\n".join(f"{k}: {v}" for k, v in values.items()) + "\nMISMATCH"
    payload = {k: poly_to_json(v) for k, v in values.items()}
    payload["agree"] = agree
    _emit(args, text, payload)
    return 0 if agree else 1


def cmd_verify(args) -> int:
    ring = _ring(args)
    if ring.characteristic != 0 and args.suite in CHAR0_SUITES:
        raise UsageError(f"suite {args.suite!r} needs the characteristic-0 ring")
    if args.trials < 0 or args.support < 1:
        raise UsageError("--trials must be >= 0 and --support >= 1")
    report = run_suite(args.suite, ring, _order(args, 8), args.trials, args.seed, args.support)
    if args.format == "json":
        print(json.dumps(report.to_json(include_timing=args.timings), indent=2))
    else:
        print(report.to_text())
    return 0 if report.passed else 1


COMMANDS = {"series": cmd_series, "boardman": cmd_boardman, "residue": cmd_residue, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"tatecalc: error: {exc}", file=sys.stderr)
        return 2
    except ClassTableError as exc:
        print(f"tatecalc: class table insufficient: {exc}", file=sys.stderr)
        return 1
    except (CharacteristicError, TatecalcError, ValueError) as exc:
        print(f"tatecalc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
