"""Command-line front end.

Subcommands: gen (emit a matrix in an interchange format), spectrum (print
a closed-form spectrum), verify (run the exact verification suites), bench
(time the eigensolver against closed forms), poly (tabulate polynomial
values exactly).
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from .doubles import DoubleCase
from .eigsolve import FAMILY_CHOICES, benchmark
from .exact import DenominatorPole, NonTerminatingSeries
from .families import (
    DualHahnParams,
    HahnParams,
    KrawtchoukParams,
    RacahParams,
    family_eval,
    family_norm,
    family_weight,
)
from .matio import exact_text, json_text, matrix_market_text
from .matrices import InadmissibleParams, TwoDiagonal, UnsupportedCase
from .verify import SUITES, run_suites

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def rational_arg(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a rational; write an integer or 'p/q' with q > 0"
        )
    return Fraction(text)


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=rational_arg, help="Hahn/Racah alpha")
    p.add_argument("--beta", type=rational_arg, help="Hahn/Racah beta")
    p.add_argument("--gamma", type=rational_arg, help="dual Hahn/Racah gamma")
    p.add_argument("--delta", type=rational_arg, help="dual Hahn/Racah delta")


def _collect_params(args) -> Dict[str, Fraction]:
    out = {}
    for name in ("alpha", "beta", "gamma", "delta"):
        v = getattr(args, name, None)
        if v is not None:
            out[name] = v
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twodiag",
        description="Two-diagonal eigenvalue test matrices, their polynomial "
                    "pairs, and exact verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a matrix")
    g.add_argument("family", choices=FAMILY_CHOICES)
    g.add_argument("-N", type=int, required=True, help="family size parameter")
    _add_param_flags(g)
    g.add_argument("--format", choices=("mm", "exact", "json"), default="mm")
    g.add_argument("-o", "--output", help="output file (default stdout)")

    s = sub.add_parser("spectrum", help="print a closed-form spectrum")
    s.add_argument("family", choices=FAMILY_CHOICES)
    s.add_argument("-N", type=int, required=True)
    _add_param_flags(s)

    v = sub.add_parser("verify", help="run exact verification suites")
    v.add_argument("--suite", default="all", choices=SUITES + ("all",))
    v.add_argument("--max-N", type=int, default=6, dest="max_n")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--draws", type=int, default=3, help="parameter draws per case")
    v.add_argument("-q", "--quiet", action="store_true", help="only print failures and summary")

    b = sub.add_parser("bench", help="benchmark the eigensolver against closed forms")
    b.add_argument("family", choices=FAMILY_CHOICES)
    b.add_argument("--dims", default="", help="comma-separated matrix dimensions")
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--vectors", action="store_true", help="also accumulate eigenvectors")
    _add_param_flags(b)
    b.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("poly", help="tabulate polynomial values exactly")
    p.add_argument("family", choices=("hahn", "dual-hahn", "racah", "krawtchouk"))
    p.add_argument("-n", type=int, required=True, help="degree")
    p.add_argument("-N", type=int, help="size parameter (not needed for racah)")
    _add_param_flags(p)
    p.add_argument("--p", type=rational_arg, help="Krawtchouk success parameter")
    p.add_argument("--minus-n", default="alpha", choices=("alpha", "beta_delta", "gamma"),
                   dest="minus_n", help="which Racah denominator parameter is -N")
    p.add_argument("--x-from", type=int, default=0)
    p.add_argument("--x-to", type=int, default=None)
    p.add_argument("--weights", action="store_true", help="add weight and norm columns")
    return parser


def _open_out(path: Optional[str]):
    return open(path, "w") if path else sys.stdout


def cmd_gen(args) -> int:
    if args.N < 1:
        raise SystemExit("error: -N must be >= 1")
    from .eigsolve import build_gallery_matrix

    bundle = build_gallery_matrix(args.family, args.N, _collect_params(args))
    if args.format == "exact" and not isinstance(bundle.matrix, TwoDiagonal):
        raise SystemExit(
            "error: exact format needs rational entries; "
            f"use the nonsym form instead of {args.family}"
        )
    if args.format == "mm":
        text = matrix_market_text(bundle.matrix)
    elif args.format == "exact":
        text = exact_text(bundle.matrix)
    else:
        shown = {k: str(v) for k, v in _collect_params(args).items()}
        text = json_text(bundle.label, shown, bundle.matrix)
    out = _open_out(args.output)
    out.write(text)
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_spectrum(args) -> int:
    if args.N < 1:
        raise SystemExit("error: -N must be >= 1")
    from .eigsolve import build_gallery_matrix

    bundle = build_gallery_matrix(args.family, args.N, _collect_params(args))
    for e in bundle.spectrum.entries:
        print(f"{e.sign:+d} {e.radicand} {float(e):.17g}")
    return 0


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    outcomes = run_suites(names, args.max_n, args.seed, args.draws)
    failures = [o for o in outcomes if not o.ok]
    for o in outcomes:
        if o.ok and args.quiet:
            continue
        status = "PASS" if o.ok else "FAIL"
        detail = f"  ({o.detail})" if o.detail else ""
        print(f"{status} {o.label}{detail}")
    print(f"{'PASS' if not failures else 'FAIL'}: "
          f"{len(outcomes) - len(failures)}/{len(outcomes)} checks "
          f"(suites: {', '.join(names)}, max-N {args.max_n}, seed {args.seed}, "
          f"draws {args.draws})")
    return 1 if failures else 0


def cmd_bench(args) -> int:
    dims = [int(t) for t in args.dims.split(",") if t.strip()]
    if not dims:
        return 0
    reports = benchmark(args.family, dims, repetitions=args.reps,
                        params=_collect_params(args) or None,
                        want_vectors=args.vectors)
    out = _open_out(args.output)
    for rep in reports:
        out.write(rep.to_json_line() + "\n")
    if out is not sys.stdout:
        out.close()
    return 0


def _poly_params(args):
    need = lambda name: getattr(args, name) is not None
    if args.family == "hahn":
        if not (need("alpha") and need("beta") and args.N):
            raise SystemExit("error: hahn needs --alpha, --beta and -N")
        return HahnParams(args.alpha, args.beta, args.N)
    if args.family == "dual-hahn":
        if not (need("gamma") and need("delta") and args.N):
            raise SystemExit("error: dual-hahn needs --gamma, --delta and -N")
        return DualHahnParams(args.gamma, args.delta, args.N)
    if args.family == "racah":
        if not all(need(k) for k in ("alpha", "beta", "gamma", "delta")):
            raise SystemExit("error: racah needs --alpha, --beta, --gamma, --delta")
        return RacahParams(args.alpha, args.beta, args.gamma, args.delta, args.minus_n)
    if args.p is None or not args.N:
        raise SystemExit("error: krawtchouk needs --p and -N")
    return KrawtchoukParams(args.p, args.N)


def cmd_poly(args) -> int:
    params = _poly_params(args)
    x_to = args.x_to if args.x_to is not None else params.N
    header = ["x", f"y_{args.n}(x)"]
    if args.weights:
        header += ["weight(x)"]
    print("\t".join(header))
    for x in range(args.x_from, x_to + 1):
        row = [str(x), str(family_eval(params, args.n, x))]
        if args.weights:
            row.append(str(family_weight(params, x)))
        print("\t".join(row))
    if args.weights:
        print(f"norm h_{args.n} = {family_norm(params, args.n)}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": cmd_gen,
        "spectrum": cmd_spectrum,
        "verify": cmd_verify,
        "bench": cmd_bench,
        "poly": cmd_poly,
    }
    try:
        return handlers[args.command](args)
    except (DenominatorPole, NonTerminatingSeries) as exc:
        print(f"error: evaluation impossible: {exc}", file=sys.stderr)
        return 2
    except (InadmissibleParams, UnsupportedCase) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
