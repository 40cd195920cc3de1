"""Command-line front end.

Subcommands: ``term``, ``range``, ``genfun``, ``binet``, ``verify``,
``bench``. Output is JSON(-lines) by default, ``--format plain`` switches
to bare text. Exit codes: 0 success / all-pass, 1 verification failure,
2 usage error, 3 benchmark value mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import statistics
import sys
import time

from . import binet as binet_mod
from . import genfun, identities, matrixengine, sequences
from .backend import KERNEL_NAME, available_kernels
from .gaussint import GaussianInt
from .sequences import NAMED_SPECS, SeqSpec

SEED_ENV_VAR = "TETRAGAUSS_SEED"
BENCH_DIGIT_LIMIT = 10_000


class UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return identities.DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


def _spec_from_args(args) -> SeqSpec:
    if getattr(args, "spec", None) is not None:
        try:
            return SeqSpec(*args.spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return NAMED_SPECS[args.seq]


def _add_spec_options(parser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--seq", choices=sorted(NAMED_SPECS), default="M",
                       help="named sequence (default M)")
    group.add_argument("--spec", nargs=4, type=int, metavar=("C0", "C1", "C2", "C3"),
                       help="initial values of a custom sequence")


def _add_format_option(parser) -> None:
    parser.add_argument("--format", choices=("json", "plain"), default="json",
                        help="output format (default json)")


def _value_payload(value) -> object:
    if isinstance(value, GaussianInt):
        return value.to_json()
    return str(value)


def _parse_window(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+):(-?\d+)", text)
    if not m:
        raise UsageError(f"window must look like LO:HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError(f"malformed window: {lo} > {hi}")
    return lo, hi


def _cmd_term(args) -> int:
    spec = _spec_from_args(args)
    if args.gaussian:
        value = sequences.gterm(spec, args.n)
    else:
        value = sequences.term(spec, args.n)
    if args.format == "plain":
        print(value)
    else:
        print(json.dumps({"n": args.n, "value": _value_payload(value)}))
    return 0


def _cmd_range(args) -> int:
    spec = _spec_from_args(args)
    if args.lo > args.hi:
        raise UsageError(f"malformed range: {args.lo} > {args.hi}")
    values = sequences.term_range(spec, args.lo, args.hi, gaussian=args.gaussian)
    for n, value in zip(range(args.lo, args.hi + 1), values):
        if args.format == "plain":
            print(value)
        else:
            print(json.dumps({"n": n, "value": _value_payload(value)}))
    return 0


def _cmd_genfun(args) -> int:
    spec = _spec_from_args(args)
    gf = genfun.gf_for(spec, gaussian=args.gaussian)
    if args.even:
        gf = genfun.bisect(gf, "even")
    elif args.odd:
        gf = genfun.bisect(gf, "odd")
    coeff_list = genfun.coeffs(gf, args.count) if args.count else None
    if args.format == "plain":
        print(f"num: {genfun.pretty(gf.num)}")
        print(f"den: {genfun.pretty(gf.den)}")
        if coeff_list is not None:
            print("coeffs: " + ", ".join(str(c) for c in coeff_list))
    else:
        payload = gf.to_json()
        if coeff_list is not None:
            payload["coeffs"] = [c.to_json() for c in coeff_list]
        print(json.dumps(payload))
    return 0


def _cmd_binet(args) -> int:
    spec = _spec_from_args(args)
    result = binet_mod.binet_eval(spec, args.n, gaussian=args.gaussian)
    rounded = result.rounded
    if args.format == "plain":
        suffix = "" if result.validated else " (unvalidated)"
        print(f"{rounded}{suffix}")
    else:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "value_re": result.value.real,
                    "value_im": result.value.imag,
                    "rounded": _value_payload(rounded),
                    "validated": result.validated,
                }
            )
        )
    return 0


def _cmd_verify(args) -> int:
    window = _parse_window(args.window)
    reports = identities.run_suite(
        window=window,
        spec_count=args.specs,
        seed=args.seed,
        source=args.source,
        only=args.only or None,
    )
    all_ok = True
    for report in reports:
        all_ok &= report.ok
        print(json.dumps(report.to_json()))
    return 0 if all_ok else 1


def _bench_value_payload(value: int) -> object:
    digits = len(str(abs(value)))
    if digits > BENCH_DIGIT_LIMIT:
        return {"digits": digits, "sign": -1 if value < 0 else 1}
    return str(value)


def _median_time(fn, repeats: int) -> tuple[float, object]:
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def _cmd_bench(args) -> int:
    spec = _spec_from_args(args)
    kernels = available_kernels()
    for n in args.n:
        iter_time, iter_val = _median_time(lambda: sequences.term(spec, n), args.repeats)

        def matrix_run():
            power = matrixengine.mat_pow(matrixengine.companion(), n)
            return matrixengine._bottom_row_apply(power, spec)

        mat_time, mat_val = _median_time(matrix_run, args.repeats)
        if iter_val != mat_val:
            print(
                f"benchmark mismatch at n={n}: iterative and matrix paths disagree",
                file=sys.stderr,
            )
            return 3
        record = {
            "n": n,
            "iterative_s": round(iter_time, 6),
            "matrix_s": round(mat_time, 6),
            "equal": True,
            "value": _bench_value_payload(iter_val),
            "kernel": KERNEL_NAME,
        }
        if args.kernels:
            per_kernel = {}
            for name, module in sorted(kernels.items()):
                spec_args = (spec.c0, spec.c1, spec.c2, spec.c3, n)
                k_time, k_val = _median_time(
                    lambda: module.term_iter(*spec_args), args.repeats
                )
                if k_val != iter_val:
                    print(f"kernel {name} disagrees at n={n}", file=sys.stderr)
                    return 3
                per_kernel[name] = round(k_time, 6)
            record["kernel_times_s"] = per_kernel
        print(json.dumps(record))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetragauss",
        description="Exact Tetranacci-family sequence computation and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_term = sub.add_parser("term", help="one sequence term")
    _add_spec_options(p_term)
    p_term.add_argument("-n", type=int, required=True, help="index (may be negative)")
    p_term.add_argument("--gaussian", action="store_true")
    _add_format_option(p_term)
    p_term.set_defaults(func=_cmd_term)

    p_range = sub.add_parser("range", help="terms over an index range")
    _add_spec_options(p_range)
    p_range.add_argument("--lo", type=int, required=True)
    p_range.add_argument("--hi", type=int, required=True)
    p_range.add_argument("--gaussian", action="store_true")
    _add_format_option(p_range)
    p_range.set_defaults(func=_cmd_range)

    p_genfun = sub.add_parser("genfun", help="generating function and coefficients")
    _add_spec_options(p_genfun)
    p_genfun.add_argument("--gaussian", action="store_true")
    parity = p_genfun.add_mutually_exclusive_group()
    parity.add_argument("--even", action="store_true", help="even-indexed subsequence")
    parity.add_argument("--odd", action="store_true", help="odd-indexed subsequence")
    p_genfun.add_argument("-k", dest="count", type=int, default=0,
                          help="also emit the first K series coefficients")
    _add_format_option(p_genfun)
    p_genfun.set_defaults(func=_cmd_genfun)

    p_binet = sub.add_parser("binet", help="floating-point closed-form evaluation")
    _add_spec_options(p_binet)
    p_binet.add_argument("-n", type=int, required=True)
    p_binet.add_argument("--gaussian", action="store_true")
    _add_format_option(p_binet)
    p_binet.set_defaults(func=_cmd_binet)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--window", default="-32:128", help="index window LO:HI")
    p_verify.add_argument("--seed", type=int, default=None,
                          help=f"spec-sampling seed (default {identities.DEFAULT_SEED}, "
                               f"or ${SEED_ENV_VAR})")
    p_verify.add_argument("--specs", type=int, default=identities.DEFAULT_SPEC_COUNT,
                          help="number of random specs")
    p_verify.add_argument("--only", action="append", metavar="ID",
                          help="restrict to one identity id (repeatable)")
    p_verify.add_argument("--source", choices=("iterative", "matrix"), default="iterative",
                          help="term computation route")
    # accept option values like -32:128
    p_verify._negative_number_matcher = re.compile(r"^-\d")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time iterative vs matrix-power computation")
    _add_spec_options(p_bench)
    p_bench.add_argument("-n", type=int, nargs="+", required=True, help="indices to benchmark")
    p_bench.add_argument("--repeats", type=int, default=5,
                         help="repetitions per timing (median reported)")
    p_bench.add_argument("--kernels", action="store_true",
                         help="also time each available kernel backend")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and args.command == "verify":
        try:
            args.seed = _default_seed()
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
