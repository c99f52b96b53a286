"""Command-line entry point: ``xychain {sweep,oracle,dump-profile,preset}``."""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from .config import DISTRIBUTIONS, ChainSpec, ProfileParams
from .oracle import GAP_ATOL, MAX_SITES, oracle_concurrence, solve
from .sweep import (VARY_PARAMS, SweepConfig, dump_profile, emit_csv, format_csv,
                    lambda_grid, load_preset, pair_entanglement, preset_names, run_sweep)

log = logging.getLogger("xychain")


def parse_grid(text: str) -> np.ndarray:
    """``start:stop:step`` (inclusive), a comma list, or a single value."""
    if ":" in text:
        start, stop, step = (float(x) for x in text.split(":"))
        return lambda_grid(start, stop, step)
    return np.array([float(x) for x in text.split(",")])


def parse_pair(text: str) -> tuple[int, int]:
    try:
        l, m = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"pair must look like 'l,m', got {text!r}")
    return l, m


def parse_vary(text: str) -> tuple[str, list[float]]:
    name, _, values = text.partition("=")
    if name not in VARY_PARAMS:
        raise argparse.ArgumentTypeError(f"unknown sweep parameter {name!r}; choose from {VARY_PARAMS}")
    if name == "none":
        return name, [0.0]
    if not values:
        raise argparse.ArgumentTypeError("expected <param>=<v1,v2,...>")
    return name, [float(v) for v in values.split(",")]


def _physics_args(p: argparse.ArgumentParser, default_n: int = 101) -> None:
    p.add_argument("--n", type=int, default=default_n, help="number of sites")
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--boundary", choices=("open", "periodic"), default="periodic")
    p.add_argument("--lambda", dest="lam", default="0:4:0.02",
                   help="start:stop:step, comma list or single value")
    p.add_argument("--dist", choices=sorted(DISTRIBUTIONS), default="pure")
    for name in ("zeta1", "zeta2", "xi1", "xi2"):
        p.add_argument(f"--{name}", type=float, default=0.0)
    p.add_argument("--epsilon", type=float, default=None, help="override the preset width")
    p.add_argument("--p", type=float, default=None, help="override the preset weight")
    p.add_argument("--pair", type=parse_pair, action="append", help="site pair l,m (repeatable)")


def spec_from_args(args) -> ChainSpec:
    alpha = ProfileParams.preset(args.dist, args.zeta1, args.zeta2, width=args.epsilon, weight=args.p)
    beta = ProfileParams.preset(args.dist, args.xi1, args.xi2, width=args.epsilon, weight=args.p)
    return ChainSpec(n_sites=args.n, lam=0.0, gamma=args.gamma, boundary=args.boundary,
                     alpha=alpha, beta=beta)


def _open_out(path):
    return sys.stdout if path in (None, "-") else path


def cmd_sweep(args) -> None:
    vary, values = args.vary
    config = SweepConfig(base=spec_from_args(args), lambda_grid=tuple(parse_grid(args.lam)),
                         vary=vary, values=tuple(values),
                         pairs=tuple(args.pair) if args.pair else None, method=args.method)
    rows = run_sweep(config, jobs=args.jobs)
    emit_csv(rows, _open_out(args.out))


def cmd_oracle(args) -> None:
    if args.n > MAX_SITES:
        raise ValueError(f"--n must be <= {MAX_SITES} for the oracle")
    base = spec_from_args(args)
    pairs = args.pair or [(args.n // 2, args.n // 2 + 1)]
    rows = []
    for lam in parse_grid(args.lam):
        spec = base.replace(lam=float(lam))
        gap = solve(spec).gap
        pipeline = pair_entanglement(spec, pairs)
        for (l, m), res in zip(pairs, pipeline):
            # degenerate ground spaces have no unique pair state
            exact = oracle_concurrence(spec, l, m).c if gap >= GAP_ATOL else float("nan")
            rows.append((lam, l, m, exact, res.concurrence.c, abs(exact - res.concurrence.c), gap))
    text = format_csv(("lambda", "l", "m", "concurrence_oracle", "concurrence_pipeline",
                       "abs_diff", "gap"), rows)
    out = _open_out(args.out)
    if hasattr(out, "write"):
        out.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def cmd_dump_profile(args) -> None:
    spec = spec_from_args(args).replace(lam=float(parse_grid(args.lam)[0]))
    dump_profile(spec, _open_out(args.out))


def cmd_preset(args) -> None:
    config = load_preset(args.name)
    out = args.out or f"{args.name}.csv"
    rows = run_sweep(config, jobs=args.jobs)
    emit_csv(rows, _open_out(out))
    log.info("wrote %d rows to %s", len(rows), out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xychain",
                                     description="Pair entanglement in impurity XY spin chains")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="lambda / parameter sweep to CSV")
    _physics_args(p)
    p.add_argument("--vary", type=parse_vary, default=("none", [0.0]), help="<param>=<v1,v2,...>")
    p.add_argument("--method", choices=("lapack", "jacobi"), default="lapack")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (0 = all cores)")
    p.add_argument("--out", default=None, help="output CSV (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="compare against exact diagonalization (small N)")
    _physics_args(p, default_n=8)
    p.set_defaults(lam="1.0")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dump-profile", help="write alpha, beta, J, h per index")
    _physics_args(p)
    p.set_defaults(lam="0.5")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dump_profile)

    p = sub.add_parser("preset", help="run a named figure configuration")
    p.add_argument("name", choices=preset_names())
    p.add_argument("--out", default=None, help="output CSV (default <name>.csv)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_preset)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"xychain: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
