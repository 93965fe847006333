"""Command-line front end: ``critdaha verify --family A --rank 2 ...``."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from .roots import InadmissibleRootSystem
from .suites import SUITES, RunConfig, run

LOG_ENV = "CRITDAHA_LOG_LEVEL"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critdaha",
        description="Exact verification of the basic representation of the critical-level DAHA.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run verification suites on one affine root system")
    v.add_argument("--family", required=True, choices=list("ABCDEFG"))
    v.add_argument("--rank", required=True, type=int)
    v.add_argument("--twist", default="untwisted", choices=["untwisted", "twisted"])
    v.add_argument("--suites", default=",".join(SUITES),
                   help=f"comma-separated subset of {','.join(SUITES)} (default: all)")
    v.add_argument("--max-length", type=int, default=4, help="length bound for triangularity")
    v.add_argument("--pbw-length", type=int, default=3, help="length bound for the PBW family")
    v.add_argument("--pbw-box", type=int, default=2, help="omega-coefficient bound for the PBW family")
    v.add_argument("--cross-set", default="generators", choices=["generators", "extended"])
    v.add_argument("--level", type=int, default=1, help="level t, with c = t <a0,a0>/2")
    v.add_argument("--box", type=int, default=4, help="omega-coefficient bound of the monomial box")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--specialize", action="store_true",
                   help="substitute seeded random nonzero rationals for tau")
    v.add_argument("--format", default="text", choices=["text", "json"])
    v.add_argument("--no-timing", action="store_true",
                   help="omit timings so that reports are byte-identical across runs")
    return parser


def config_from_args(args) -> RunConfig:
    suites = tuple(s.strip() for s in args.suites.split(",") if s.strip())
    if not suites:
        raise ValueError("no suites selected")
    return RunConfig(family=args.family, rank=args.rank, twist=args.twist, suites=suites,
                     max_length=args.max_length, pbw_length=args.pbw_length,
                     pbw_box=args.pbw_box, cross_set=args.cross_set, level=args.level,
                     box=args.box, seed=args.seed, specialize=args.specialize,
                     timing=not args.no_timing)


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get(LOG_ENV, "WARNING").upper(), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        cfg.spec  # validates family/rank/twist
    except (ValueError, InadmissibleRootSystem) as exc:
        parser.error(str(exc))
    reports = run(cfg)
    for r in reports:
        print(r.to_json() if args.format == "json" else r.render_text())
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
