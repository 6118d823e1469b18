"""``fimhom`` command line.

Exit codes: 0 success, 1 an asserted check failed, 2 usage or file format
error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import InvariantError, UsageError
from .io import atomic_write, dumps_module, load_module
from .report import Report
from .suites import SUITES, SuiteConfig, parse_t, parse_t_range, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fimhom", description="Exact computations with FI^m truncations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of: {', '.join(SUITES)}, all")
    v.add_argument("--m", type=int)
    v.add_argument("--t", help="truncation, e.g. 3 or 3,3")
    v.add_argument("--t-range", help="range of truncations, e.g. 2..5 or 2,2..4,4")
    v.add_argument("--max-n", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out")

    c = sub.add_parser("compute", help="apply an operation to module files")
    c.add_argument("op", choices=["coind", "shift", "tensor", "nakayama", "torsion", "ext1"])
    c.add_argument("--i", type=int, default=1, help="coordinate (1-based)")
    c.add_argument("--in", dest="inputs", action="append", default=[])
    c.add_argument("--v")
    c.add_argument("--w")
    c.add_argument("--out")
    return p


def _config(args) -> SuiteConfig:
    seed = args.seed
    env = os.environ.get("FIMHOM_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"FIMHOM_SEED={env!r} is not an integer") from None
    if not 0 <= seed < 2**64:
        raise UsageError("seed must fit in 64 unsigned bits")
    t = parse_t(args.t) if args.t else None
    if args.m is not None and args.m < 1:
        raise UsageError("--m must be positive")
    if t is not None and args.m is not None and len(t) != args.m:
        if len(t) == 1:
            t = t * args.m
        else:
            raise UsageError(f"--t {args.t} does not have arity {args.m}")
    if args.max_n is not None and args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    tr = parse_t_range(args.t_range, args.m) if args.t_range else None
    return SuiteConfig(args.suite, args.m, t, tr, args.max_n, seed, args.out)


def cmd_verify(args) -> int:
    cfg = _config(args)
    rep = run_suite(cfg)
    if cfg.out:
        atomic_write(cfg.out, rep.to_json())
    print(rep.text())
    return EXIT_FAIL if rep.failed else EXIT_OK


def _one_input(args):
    if len(args.inputs) != 1:
        raise UsageError(f"compute {args.op} takes exactly one --in")
    return load_module(args.inputs[0])


def _emit(text: str, out):
    if out:
        atomic_write(out, text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    from . import functors, homological, modules

    op = args.op
    i = args.i - 1
    if op == "ext1":
        if not (args.v and args.w):
            raise UsageError("compute ext1 needs --v and --w")
        V, W = load_module(args.v), load_module(args.w)
        res = homological.ext1(V, W)
        rep = Report("compute ext1", {"v": args.v, "w": args.w})
        rep.add("ext1", "RECORDED", dim=res.dim, hom_K=res.hom_K, restriction_rank=res.restriction_rank)
        _emit(rep.to_json(), args.out)
        return EXIT_OK
    if op == "tensor":
        if len(args.inputs) < 2:
            raise UsageError("compute tensor needs at least two --in")
        out = modules.external_tensor(*(load_module(p) for p in args.inputs))
    else:
        V = _one_input(args)
        if op == "coind":
            out = functors.coind_definitional(V, i)
        elif op == "shift":
            out = functors.shift(V, i)
        elif op == "nakayama":
            out = homological.nakayama(V)
        else:
            out, _, stable = homological.torsion_submodule(V)
            if not stable:
                print("warning: torsion differs from the next lower truncation", file=sys.stderr)
    _emit(dumps_module(out), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_compute(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
