"""Command-line front end: evaluate gallery functions, run witness claims,
emit criterion tables and Monte Carlo reports.

Exit codes: 0 pass, 1 claim failure, 2 usage/parse error, 3 insufficient
precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import DEFAULT_PRECISION, DomainError, InsufficientPrecision, \
    PadicNumber, Prime, parse_padic
from .haar import estimate_E_prefix_series, estimate_Y0, slln_report
from .vanderput import power_str
from .zoo import ENTRY_NAMES, build_entry, lip_coefficient_rows
from .families import IndexSet

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3

HAAR_CLAIMS = ("Y0", "E-prefix", "slln")


@dataclass(frozen=True)
class RunConfig:
    prime: int
    precision: int
    seed: int
    fmt: str = "text"
    out: Optional[str] = None

    def __post_init__(self) -> None:
        Prime(self.prime)
        if self.precision < 8:
            raise DomainError("precision must be at least 8 digits")

    def echo(self) -> dict:
        return {"prime": self.prime, "precision": self.precision,
                "seed": self.seed}


def _emit(config: RunConfig, text: str) -> None:
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _entry_from_args(args, config: RunConfig):
    beta = None
    if args.beta is not None:
        beta = parse_padic(args.beta, config.prime, config.precision)
    return build_entry(args.entry, config.prime, config.precision,
                       family_size=args.set[0], member_bit=args.set[1],
                       beta=beta)


def cmd_eval(args, config: RunConfig) -> int:
    entry = _entry_from_args(args, config)
    x = parse_padic(args.x, config.prime, config.precision)
    value = entry.function(x)
    if config.fmt == "json":
        _emit(config, json.dumps({"schema": 1, **config.echo(),
                                  "entry": entry.name, "x": x.render(),
                                  "value": value.render()}, indent=2))
    else:
        _emit(config, value.render())
    return EXIT_PASS


def cmd_verify(args, config: RunConfig) -> int:
    if args.entry == "haar":
        return _verify_haar(args, config)
    entry = _entry_from_args(args, config)
    kwargs = {}
    if args.limit is not None:
        key = "n_limit" if args.claim in ("n1-decay", "lip2-unbounded") \
            else "limit"
        kwargs[key] = args.limit
    result = entry.run_claim(args.claim, **kwargs)
    report = json.dumps({"schema": 1, **config.echo(),
                         "entry": entry.name,
                         **result.to_json_dict()}, indent=2)
    _emit(config, report)
    return EXIT_PASS if result.passed else EXIT_FAIL


def _verify_haar(args, config: RunConfig) -> int:
    p, seed, n = config.prime, config.seed, args.samples
    if args.claim == "Y0":
        reports = [estimate_Y0(p, n, seed)]
    elif args.claim == "E-prefix":
        reports = estimate_E_prefix_series(p, args.k, n, seed)
    elif args.claim == "slln":
        reports = [slln_report(p, args.k, n, seed)]
    else:
        raise DomainError(
            f"unknown haar claim {args.claim!r}; have {HAAR_CLAIMS}")
    passed = all(r.within(3.0) for r in reports)
    body = [json.loads(r.to_json()) for r in reports]
    _emit(config, json.dumps({"schema": 1, **config.echo(),
                              "entry": "haar", "claim": args.claim,
                              "passed": passed, "reports": body}, indent=2))
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_table(args, config: RunConfig) -> int:
    if args.entry != "lip_fN":
        raise DomainError("criterion tables are provided for lip_fN")
    p = config.prime
    alpha = args.alpha
    N = IndexSet(args.set[0], args.set[1], 0)
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["n", "coeff_norm", "coeff_norm_decimal",
                "product_n1", f"product_alpha_{alpha}"])
    sup = Fraction(0)
    for n, k, m, norm in lip_coefficient_rows(N, p, args.n_max):
        p1 = norm * k
        pa = norm * Fraction(k) ** alpha
        sup = max(sup, pa)
        w.writerow([n, power_str(p, norm), _flt(norm), _flt(p1), _flt(pa)])
    _emit(config, buf.getvalue().rstrip("\n"))
    return EXIT_PASS


def _flt(q: Fraction) -> float:
    try:
        return float(q)
    except OverflowError:
        import math
        return math.inf


def cmd_haar(args, config: RunConfig) -> int:
    reports = estimate_E_prefix_series(config.prime, args.k, args.samples,
                                       config.seed)
    y0 = estimate_Y0(config.prime, args.samples, config.seed)
    body = {
        "schema": 1,
        **config.echo(),
        "samples": args.samples,
        "Y0": json.loads(y0.to_json()),
        "E_prefix": [json.loads(r.to_json()) for r in reports],
    }
    _emit(config, json.dumps(body, indent=2))
    ok = y0.within(3.0) and all(r.within(3.0) for r in reports)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_list(args, config: RunConfig) -> int:
    lines = []
    for name in ENTRY_NAMES:
        try:
            entry = build_entry(name, config.prime, max(config.precision, 16))
        except DomainError:
            continue
        lines.append(f"{name}: claims = {sorted(entry.claims)}")
    lines.append(f"haar: claims = {sorted(HAAR_CLAIMS)}")
    _emit(config, "\n".join(lines))
    return EXIT_PASS


def _parse_set(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError('expected "k,bit"')
    return int(parts[0]), int(parts[1])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padiczoo",
        description="Evaluate and verify pathological p-adic functions.")
    parser.add_argument("--prime", type=int, default=2)
    parser.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", dest="fmt", default="text",
                        choices=("text", "json", "csv"))
    parser.add_argument("--out", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_entry_opts(sp):
        sp.add_argument("entry")
        sp.add_argument("--set", type=_parse_set, default=(3, 0),
                        help='index set as "k,bit" in the periodic family')
        sp.add_argument("--beta", default=None,
                        help="exponent for the analytic entries")

    sp = sub.add_parser("eval", help="evaluate an entry at a point")
    add_entry_opts(sp)
    sp.add_argument("x", help='point, e.g. "7", "1/3", "p^2"')
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("verify", help="run a registered claim")
    add_entry_opts(sp)
    sp.add_argument("claim")
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--k", type=int, default=10)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("table", help="emit a coefficient criterion table")
    add_entry_opts(sp)
    sp.add_argument("--alpha", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=100)
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("haar", help="Monte Carlo digit-pair statistics")
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--k", type=int, default=10)
    sp.set_defaults(fn=cmd_haar)

    sp = sub.add_parser("list", help="list entries and their claims")
    sp.set_defaults(fn=cmd_list)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        config = RunConfig(args.prime, args.precision, args.seed,
                           args.fmt, args.out)
        return args.fn(args, config)
    except InsufficientPrecision as exc:
        print(f"insufficient precision: {exc} "
              f"(retry with a larger --precision)", file=sys.stderr)
        return EXIT_PRECISION
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
