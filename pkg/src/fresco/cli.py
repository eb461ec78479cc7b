"""Command-line front end: ``fresco mine | gen | bench``."""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import resource
import sys
import time
from fractions import Fraction

from . import __version__
from .complex_store import ComplexStore, ParseError, load_path
from .generate import InfeasibleParameters, format_complex, generate_complex
from .miner import DECISION, EXACT, MiningConfig, MiningResult, mine

log = logging.getLogger("fresco")

TSV_HEADER = "canon_hex\tsimplet\tsize\tdim\tsupport\n"


class UsageError(Exception):
    pass


def default_threads() -> int:
    env = os.environ.get("FRESCO_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"FRESCO_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def resolve_tau(args, store: ComplexStore) -> int:
    if args.tau is not None:
        return args.tau
    frac = Fraction(str(args.tau_fraction))
    if not 0 < frac <= 1:
        raise UsageError("--tau-fraction must be in (0, 1]")
    return max(1, math.ceil(frac * store.num_vertices))


def format_tsv(result: MiningResult) -> str:
    rows = [TSV_HEADER]
    tau = result.config.tau
    for e in result.sorted_entries():
        support = str(e.support) if e.exact else f"≥{tau}"
        rows.append(f"{e.canonical.hex()}\t{e.text()}\t{e.size}\t{e.dimension}\t{support}\n")
    return "".join(rows)


def build_report(result: MiningResult, store: ComplexStore, input_path: str) -> dict:
    cfg = result.config
    return {
        "schema": 1,
        "version": __version__,
        "config": {
            "input": input_path,
            "tau": cfg.tau,
            "max_size": cfg.max_size,
            "min_dim": cfg.min_dim,
            "mode": cfg.mode,
            "timeout_ms": None if cfg.timeout is None else cfg.timeout * 1000,
            "threads": cfg.workers,
            "inflate_at_cap": cfg.inflate_at_cap,
        },
        "input_sha256": store.digest(),
        "dataset": store.counts(),
        "results": [
            {
                "canon_hex": e.canonical.hex(),
                "simplet": e.text(),
                "size": e.size,
                "dim": e.dimension,
                "support": e.support,
                "exact": e.exact,
            }
            for e in result.sorted_entries()
        ],
        "stats": result.stats,
        "level_times": {str(k): v for k, v in sorted(result.level_times.items())},
        "peak_rss_kb": resource.getrusage(resource.RUSAGE_SELF).ru_maxrss,
    }


def _config_from(args, store: ComplexStore, mode: str | None = None, tau: int | None = None) -> MiningConfig:
    timeout = None if args.timeout_ms <= 0 else args.timeout_ms / 1000
    threads = args.threads if args.threads is not None else default_threads()
    return MiningConfig(
        tau=tau if tau is not None else resolve_tau(args, store),
        max_size=args.max_size,
        min_dim=args.min_dim,
        mode=mode or args.mode,
        timeout=timeout,
        workers=threads,
        inflate_at_cap=args.inflate_at_cap,
    )


def cmd_mine(args) -> int:
    store = load_path(args.input)
    cfg = _config_from(args, store)
    result = mine(store, cfg)
    tsv = format_tsv(result)
    report = build_report(result, store, args.input)
    if args.output:
        with open(f"{args.output}.tsv", "w", encoding="utf-8") as fh:
            fh.write(tsv)
        with open(f"{args.output}.report.json", "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    else:
        sys.stdout.write(tsv)
    log.info(
        "%d frequent simplets, %d examined, %.3fs",
        len(result.entries),
        result.stats["examined"],
        result.stats["wall_time"],
    )
    return 0


def cmd_gen(args) -> int:
    simplices = generate_complex(
        vertices=args.vertices,
        maximal=args.maximal,
        max_dim=args.max_dim,
        min_dim=args.min_dim,
        seed=args.seed,
        dim_decay=args.dim_decay,
        plant=args.plant,
        copies=args.copies,
    )
    text = format_complex(simplices)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def run_bench(store: ComplexStore, args) -> list[dict]:
    rows = []
    for tau in args.tau:
        row = {"tau": tau}
        for mode in (DECISION, EXACT):
            cfg = _config_from(args, store, mode=mode, tau=tau)
            start = time.perf_counter()
            result = mine(store, cfg)
            row[f"{mode}_seconds"] = time.perf_counter() - start
            row[f"{mode}_frequent"] = len(result.entries)
            row[f"{mode}_set"] = sorted(e.canonical.hex() for e in result.entries)
        row["agree"] = row.pop("decision_set") == row.pop("exact_set")
        row["ratio"] = row["exact_seconds"] / max(row["decision_seconds"], 1e-9)
        rows.append(row)
    return rows


def cmd_bench(args) -> int:
    store = load_path(args.input)
    rows = run_bench(store, args)
    cols = ["tau", "decision_frequent", "exact_frequent", "agree", "decision_seconds", "exact_seconds", "ratio"]
    lines = ["\t".join(cols)]
    for r in rows:
        lines.append("\t".join(f"{r[c]:.4f}" if isinstance(r[c], float) else str(r[c]) for c in cols))
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(f"{args.output}.bench.tsv", "w", encoding="utf-8") as fh:
            fh.write(text)
        with open(f"{args.output}.bench.json", "w", encoding="utf-8") as fh:
            json.dump({"schema": 1, "dataset": store.counts(), "rows": rows}, fh, indent=2)
    sys.stdout.write(text)
    return 0


def cmd_oracle(args) -> int:
    from .oracle import oracle_enumerate_simplets, oracle_sup

    store = load_path(args.input)
    sys.stdout.write("simplet\tsize\tdim\tsup\n")
    for p in oracle_enumerate_simplets(args.max_size):
        if p.num_vertices < 2:
            continue
        dim = max(len(s) for s in p.maximal) - 1
        sys.stdout.write(f"{p.text()}\t{p.num_vertices}\t{dim}\t{oracle_sup(store, p)}\n")
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _add_mining_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="complex file, one simplex per line")
    p.add_argument("--output", help="output prefix")
    p.add_argument("--max-size", type=_positive_int, default=5)
    p.add_argument("--min-dim", type=_positive_int, default=1)
    p.add_argument("--timeout-ms", type=float, default=500.0, help="per-candidate budget, decision mode (<=0: none)")
    p.add_argument("--threads", type=_positive_int, default=None, help="worker threads (default: FRESCO_THREADS or all cores)")
    p.add_argument(
        "--inflate-at-cap",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="also inflate simplets that already have max-size vertices",
    )
    p.add_argument("--seed", type=int, default=0, help="accepted for reproducibility records; mining is deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fresco", description="Frequent simplet mining in simplicial complexes")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="{mine,gen,bench}")

    p = sub.add_parser("mine", help="mine frequent simplets")
    _add_mining_flags(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--tau", type=_positive_int, help="minimum support (absolute)")
    g.add_argument("--tau-fraction", type=float, help="minimum support as a fraction of the vertex count")
    p.add_argument("--mode", choices=[DECISION, EXACT], default=DECISION)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("gen", help="generate a synthetic complex")
    p.add_argument("--vertices", type=_positive_int, required=True)
    p.add_argument("--maximal", type=int, required=True)
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--min-dim", type=int, default=1)
    p.add_argument("--dim-decay", type=float, default=0.5, help="weight ratio between consecutive dimensions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plant", help="simplet to plant, e.g. '0,1,2;2,3'")
    p.add_argument("--copies", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time decision vs exact mode over a tau sweep")
    _add_mining_flags(p)
    p.add_argument("--tau", type=_positive_int, nargs="+", required=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help=argparse.SUPPRESS)
    p.add_argument("--input", required=True)
    p.add_argument("--max-size", type=_positive_int, default=3)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (InfeasibleParameters, ValueError) as exc:
        if isinstance(exc, (ParseError, InfeasibleParameters)):
            print(f"fresco: {exc}", file=sys.stderr)
            return 1 if isinstance(exc, ParseError) else 2
        raise
    except OSError as exc:
        print(f"fresco: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
