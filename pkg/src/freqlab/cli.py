"""Command-line front end.

Subcommands::

    freqlab eval      --signal f.sig --n 7            point analysis
    freqlab eval      --f a.sig --g b.sig --n 7       bilinear point analysis
    freqlab profile   --signal f.sig --from -5 --to 5 CSV of (n, M, F)
    freqlab levelset  --signal f.sig --mode K --C 2/1 --N-grid 10,100  census CSV
    freqlab covering  --input intervals.txt           greedy selection report
    freqlab gen       --family spike_pair --C 100 --out f.sig
    freqlab verify    --suite oracle --trials 1000 --seed 1

All numeric flags that carry rational values use exact ``p/q`` syntax;
decimals are rejected.  Exit codes: 0 success, 1 failed verification
assertion, 2 usage or parse error.  Output for fixed inputs, flags, and
seed is byte identical across runs and worker counts.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import verify as verify_mod
from .covering import greedy_disjoint, read_intervals, triple
from .families import GeneratorSpec, generate, metadata_lines
from .levelsets import LevelParams, census_csv, density_curves
from .maximal import analyze, bilinear_analyze, frequency_profile
from .signal import (
    IntegerInterval,
    SignalFormatError,
    parse_rational,
    parse_strict_int,
    read_signal,
    write_signal,
)

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2

LEVELSET_MODES = ("K", "S", "theta-zero")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grid(text: str) -> list[int]:
    try:
        values = [parse_strict_int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad N grid {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("N grid needs positive integers")
    if any(a >= b for a, b in zip(values, values[1:])):
        raise argparse.ArgumentTypeError("N grid must be strictly increasing")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freqlab",
        description="Exact analysis of centered averages and their least maximizing radii.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="analyze one point")
    p_eval.add_argument("--signal", help="signal file (unilinear)")
    p_eval.add_argument("--f", dest="first", help="left signal file (bilinear)")
    p_eval.add_argument("--g", dest="second", help="right signal file (bilinear)")
    p_eval.add_argument("--n", type=int, required=True)

    p_profile = sub.add_parser("profile", help="scan a range of points to CSV")
    p_profile.add_argument("--signal", required=True)
    p_profile.add_argument("--from", dest="start", type=int, required=True)
    p_profile.add_argument("--to", dest="stop", type=int, required=True)
    p_profile.add_argument("--out")
    p_profile.add_argument("--threads", type=int, default=1)

    p_level = sub.add_parser("levelset", help="census CSV over an N grid")
    p_level.add_argument("--signal", required=True)
    p_level.add_argument("--mode", choices=LEVELSET_MODES, default="K")
    p_level.add_argument("--C", dest="ratio", type=_rational, required=True)
    p_level.add_argument("--epsilon", type=_rational, default=Fraction(1))
    p_level.add_argument("--N-grid", dest="n_grid", type=_grid, required=True)
    p_level.add_argument("--out")
    p_level.add_argument("--threads", type=int, default=1)

    p_cover = sub.add_parser("covering", help="greedy disjoint selection report")
    p_cover.add_argument("--input", required=True)
    p_cover.add_argument("--out")

    p_gen = sub.add_parser("gen", help="generate a built-in family signal file")
    p_gen.add_argument("--family", required=True)
    p_gen.add_argument("--epsilon", type=_rational)
    p_gen.add_argument("--cutoff", type=int)
    p_gen.add_argument("--C", dest="size", type=int, help="spike size (spike_pair)")
    p_gen.add_argument("--C-min", dest="size_min", type=int, help="smallest block (composite_jump)")
    p_gen.add_argument("--C-max", dest="size_max", type=int, help="largest block (composite_jump)")
    p_gen.add_argument("--precision", type=int, default=128, help="dyadic value bits")
    p_gen.add_argument("--out", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite", required=True, choices=sorted(verify_mod.SUITES) + ["all"]
    )
    p_verify.add_argument("--trials", type=int)
    p_verify.add_argument("--seed", type=int, default=1)

    return parser


def _load_signal(path):
    try:
        return read_signal(path)
    except (OSError, SignalFormatError, ValueError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="ascii", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _format_radii(result) -> str:
    if result.extremal_radii is None:
        return "all"
    return "{" + ",".join(str(r) for r in result.extremal_radii) + "}"


def _cmd_eval(args, parser) -> int:
    bilinear = args.first or args.second
    if bilinear and (not args.first or not args.second or args.signal):
        parser.error("bilinear eval needs both --f and --g (and no --signal)")
    if not bilinear and not args.signal:
        parser.error("eval needs --signal, or --f with --g")
    if bilinear:
        f = _load_signal(args.first)
        g = _load_signal(args.second)
        res = bilinear_analyze(f, g, args.n)
        flag = " degenerate" if res.degenerate else ""
        print(f"B={res.maximal_value} F={res.frequency} E={_format_radii(res)}{flag}")
    else:
        f = _load_signal(args.signal)
        res = analyze(f, args.n)
        flag = " zero-signal" if res.zero_signal else ""
        print(f"M={res.maximal_value} F={res.frequency} E={_format_radii(res)}{flag}")
    return EXIT_OK


def _cmd_profile(args, parser) -> int:
    if args.start > args.stop:
        parser.error(f"--from {args.start} exceeds --to {args.stop}")
    f = _load_signal(args.signal)
    rows = frequency_profile(f, IntegerInterval(args.start, args.stop), threads=args.threads)
    lines = ["n,M,F"] + [f"{n},{m},{fr}" for n, m, fr in rows]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_levelset(args, parser) -> int:
    if args.ratio <= 1:
        parser.error(f"--C must exceed 1, got {args.ratio}")
    f = _load_signal(args.signal)
    kind = "zero" if args.mode == "theta-zero" else "linear"
    params = LevelParams(args.ratio, args.epsilon, kind)
    source = "band" if args.mode == "S" else "sublinear"
    census = density_curves(
        f, params, args.n_grid, threads=args.threads, density_source=source
    )
    _emit(census_csv(census), args.out)
    return EXIT_OK


def _cmd_covering(args, parser) -> int:
    try:
        intervals = read_intervals(args.input)
    except (OSError, ValueError) as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not intervals:
        print(f"error: {args.input}: no intervals", file=sys.stderr)
        return EXIT_USAGE
    sel = greedy_disjoint(intervals)
    lines = [
        "chosen indices: " + " ".join(str(k) for k in sel.chosen),
        "chosen intervals: " + " ".join(str(intervals[k]) for k in sel.chosen),
        f"chosen length sum: {sel.chosen_length_sum}",
        f"union size: {sel.union_size}",
    ]
    bound_ok = 3 * sel.chosen_length_sum >= sel.union_size
    lines.append(
        f"one-third bound: {'PASS' if bound_ok else 'FAIL'} "
        f"(3 * {sel.chosen_length_sum} >= {sel.union_size})"
    )
    tripled = " ".join(str(triple(intervals[k])) for k in sel.chosen)
    lines.append(f"tripled cover: {tripled}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if bound_ok else EXIT_ASSERTION


def _cmd_gen(args, parser) -> int:
    family = args.family
    try:
        if family == "composite_jump":
            if args.size_min is None or args.size_max is None:
                parser.error("composite_jump needs --C-min and --C-max")
            spec = GeneratorSpec(
                family, cutoff=args.size_max, size=args.size_min,
                precision_bits=args.precision,
            )
        elif family == "spike_pair":
            if args.size is None:
                parser.error("spike_pair needs --C")
            spec = GeneratorSpec(family, size=args.size, precision_bits=args.precision)
        else:
            spec = GeneratorSpec(
                family, epsilon=args.epsilon, cutoff=args.cutoff,
                precision_bits=args.precision,
            )
        signal = generate(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    write_signal(signal, args.out, metadata_lines(spec))
    return EXIT_OK


def _cmd_verify(args, parser) -> int:
    names = sorted(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    for name in names:
        for check in verify_mod.run_suite(name, trials=args.trials, seed=args.seed):
            status = "PASS" if check.passed else "FAIL"
            detail = f" ({check.detail})" if check.detail else ""
            print(f"[{status}] {name}: {check.name}{detail}")
            if not check.passed:
                failures += 1
                if check.replay:
                    suffix, text = check.replay
                    path = f"freqlab-replay-{suffix}"
                    with open(path, "w", encoding="ascii") as handle:
                        handle.write(text)
                    print(f"  offending instance written to {path}")
    print(f"{'OK' if failures == 0 else 'FAILED'}: {failures} failed assertion(s)")
    return EXIT_OK if failures == 0 else EXIT_ASSERTION


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "eval": _cmd_eval,
        "profile": _cmd_profile,
        "levelset": _cmd_levelset,
        "covering": _cmd_covering,
        "gen": _cmd_gen,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
