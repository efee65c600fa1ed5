"""Command-line front end: ``msl compute | check | sweep | az``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from .az import az_involution
from .checks import SUITES, CheckConfig, run_suites
from .core import MultisegmentError, balanced_flag, is_ladder, is_regular, is_speh, parse_multisegment, serialize
from .pi_oracle import SampleConfig
from .poles import METHODS, BackendDisagreement, MethodUnavailable, pole_report
from .sampling import FILTERS, SweepConfig, sweep_pairs

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_METHOD, EXIT_DISAGREE = 0, 1, 2, 3, 4

SWEEP_COLUMNS = (
    "m", "n",
    "is_ladder_m", "is_ladder_n", "is_speh_m", "is_speh_n", "is_regular_m", "is_regular_n",
    "balanced_m", "balanced_n",
    "lambda_Z_mn", "lambda_Z_nm", "lambda_nr", "alpha", "alpha_plus", "frak_d",
    "method", "checks_passed",
)  # fmt: skip


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _default_seed() -> int:
    raw = os.environ.get("MSL_SEED")
    if raw is None or raw.strip() == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        print(f"msl: error: MSL_SEED must be an integer, got {raw!r}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _multiseg(text: str):
    try:
        return parse_multisegment(text)
    except MultisegmentError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _coord_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO,HI, got {text!r}") from None
    return lo, hi


def _sample_config(args) -> SampleConfig:
    return SampleConfig(prime=args.prime, samples=args.samples, seed=args.seed)


def _flag(b: bool) -> str:
    return "true" if b else "false"


# -- subcommands --------------------------------------------------------------------------


def cmd_compute(args) -> int:
    try:
        cfg = _sample_config(args)
    except ValueError as exc:
        print(f"msl compute: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        rep = pole_report(args.m, args.n, cfg, args.method, args.check)
    except MethodUnavailable as exc:
        print(f"msl compute: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except BackendDisagreement as exc:
        print(f"msl compute: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(json.dumps(exc.report.to_dict(), indent=2), file=sys.stderr)
        return EXIT_DISAGREE
    print(rep.to_json())
    return EXIT_OK


def cmd_check(args) -> int:
    cfg = CheckConfig(seed=args.seed, max_segments=args.max_segments)
    if args.cases is not None:
        cfg = replace(cfg, cases=args.cases)
    results = run_suites(args.suite, cfg)
    for r in results:
        print(r.line())
    passed = sum(r.passed for r in results)
    failed = sum(r.failed for r in results)
    print(f"total: {passed} passed, {failed} failed")
    summary = {
        "seed": args.seed,
        "suites": list(args.suite),
        "passed": passed,
        "failed": failed,
        "failures": [
            {"suite": r.suite, "property": r.name, "failed": r.failed, "minimal_failure": r.minimal_failure}
            for r in results
            if not r.ok
        ],
    }
    print(json.dumps(summary))
    return EXIT_OK if failed == 0 else EXIT_FAIL


def sweep_row(pair, cfg: SampleConfig) -> list[str]:
    m, n = pair
    try:
        rep = pole_report(m, n, cfg, check=True)
        ok = True
    except BackendDisagreement as exc:
        rep, ok = exc.report, False
    return [
        serialize(m), serialize(n),
        _flag(is_ladder(m)), _flag(is_ladder(n)), _flag(is_speh(m)), _flag(is_speh(n)),
        _flag(is_regular(m)), _flag(is_regular(n)), _flag(balanced_flag(m)), _flag(balanced_flag(n)),
        str(rep.lambda_Z), str(rep.lambda_L), str(rep.lambda_nr), str(rep.alpha), str(rep.alpha_plus), str(rep.frak_d),
        rep.method, _flag(ok),
    ]  # fmt: skip


def _sweep_worker(job):
    pair, cfg = job
    return sweep_row(pair, cfg)


def render_sweep(scfg: SweepConfig, cfg: SampleConfig, jobs: int = 1) -> str:
    """CSV text of a sweep; rows are emitted in draw order regardless of ``jobs``."""
    pairs = list(sweep_pairs(scfg))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_worker, [(p, cfg) for p in pairs], chunksize=8))
    else:
        rows = [sweep_row(p, cfg) for p in pairs]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    w.writerows(rows)
    return buf.getvalue()


def cmd_sweep(args) -> int:
    try:
        scfg = SweepConfig(
            seed=args.seed,
            count=args.count,
            max_segments=args.max_segments,
            coord_range=args.coord_range,
            filters=frozenset(args.filter or ()),
        )
        cfg = _sample_config(args)
    except ValueError as exc:
        print(f"msl sweep: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = render_sweep(scfg, cfg, args.jobs)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_az(args) -> int:
    print(serialize(az_involution(args.m)))
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    seed = _default_seed()
    p = _Parser(prog="msl", description="Pole orders of intertwining operators via multisegment combinatorics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sampling_flags(sp):
        sp.add_argument("--prime", type=int, default=SampleConfig.prime, help="prime field for the oracle")
        sp.add_argument("--samples", type=int, default=SampleConfig.samples, help="generic draws per Hom")
        sp.add_argument("--seed", type=int, default=seed, help="master seed (default: $MSL_SEED or 0)")

    c = sub.add_parser("compute", help="pole report for one ordered pair (JSON)")
    c.add_argument("--m", type=_multiseg, required=True)
    c.add_argument("--n", type=_multiseg, required=True)
    c.add_argument("--method", choices=METHODS, default="auto")
    c.add_argument("--check", action="store_true", help="run every applicable backend and transport route")
    sampling_flags(c)
    c.set_defaults(func=cmd_compute)

    k = sub.add_parser("check", help="seeded property batteries")
    k.add_argument("--suite", choices=SUITES + ("all",), action="append", default=None)
    k.add_argument("--seed", type=int, default=seed)
    k.add_argument("--max-segments", type=int, default=4)
    k.add_argument("--cases", type=int, default=None, help="random cases per property")
    k.set_defaults(func=cmd_check)

    s = sub.add_parser("sweep", help="random pairs to CSV")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--max-segments", type=int, default=4)
    s.add_argument("--coord-range", type=_coord_range, default=(0, 6), metavar="LO,HI")
    s.add_argument("--filter", choices=FILTERS, action="append")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unaffected)")
    s.add_argument("--output", "-o", default=None)
    sampling_flags(s)
    s.set_defaults(func=cmd_sweep)

    a = sub.add_parser("az", help="Aubert-Zelevinsky dual, canonical form")
    a.add_argument("--m", type=_multiseg, required=True)
    a.set_defaults(func=cmd_az)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "suite", "unset") is None:
        args.suite = ["all"]
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
