"""Command-line entry point: enumerate, reduce, count, estimate, verify.

Exit codes: 0 success, 1 verification failure, 2 missing or unwritable
inputs, 3 resource (capacity) failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .characters import capacity_estimate, frobenius_count
from .engine import DEFAULT_CHUNK, CapacityError, enumerate_by_triple
from .reduce import build_table, reduce_to_Cg
from .rules import admissible_type_triples, all_type_triples, edge_bounds
from . import store

log = logging.getLogger("minsep")

LONG_RUN_GENUS = 4
EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
MODES = ("enumerate", "reduce", "count", "estimate", "verify")


@dataclass
class RunConfig:
    mode: str
    genus: int = 1
    edges: Optional[int] = None
    workers: int = 1
    chunk_size: int = DEFAULT_CHUNK
    out: Path = Path("out")
    allow_long: bool = False
    max_brins: int = 5
    plot: bool = True
    inject_fault: Optional[str] = None

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode}")
        if self.workers < 1:
            raise ValueError("--workers must be at least 1")
        if self.genus < 0:
            raise ValueError("--genus must be non-negative")
        if self.chunk_size < 1:
            raise ValueError("--chunk-size must be positive")
        if self.edges is not None:
            if self.genus < 1:
                raise ValueError("--edges needs genus >= 1")
            lo, hi = edge_bounds(self.genus)
            if not lo <= self.edges <= hi:
                raise ValueError(f"--edges must lie in [{lo}, {hi}] for genus {self.genus}")


def _fail(code: int, msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_enumerate(cfg: RunConfig) -> int:
    if cfg.genus >= LONG_RUN_GENUS and not cfg.allow_long:
        return _fail(EXIT_INPUT, f"genus {cfg.genus} runs for hours; pass --allow-long to proceed")
    try:
        if cfg.genus == 0:
            per_triple = [(store.BASE_KEY, [store.base_entry()])]
        else:
            t0 = time.perf_counter()
            per_triple = enumerate_by_triple(cfg.genus, workers=cfg.workers,
                                             chunk_size=cfg.chunk_size, edges=cfg.edges)
            log.info("enumerated genus %d in %.1fs", cfg.genus, time.perf_counter() - t0)
    except CapacityError as exc:
        return _fail(EXIT_RESOURCE, f"capacity exceeded for triple {exc.triple_key}")
    try:
        store.write_shards(cfg.out, cfg.genus, per_triple, cfg.edges)
    except OSError as exc:
        return _fail(EXIT_INPUT, f"cannot write output: {exc}")
    total = sum(len(entries) for _, entries in per_triple)
    print(f"|R_{cfg.genus}| = {total}" if cfg.edges is None else f"|R_{cfg.genus}| (E={cfg.edges}) = {total}")
    return EXIT_OK


def cmd_reduce(cfg: RunConfig) -> int:
    try:
        r_lists = {g: store.read_entries(cfg.out, g) for g in range(1, cfg.genus + 1)}
    except store.MissingData as exc:
        return _fail(EXIT_INPUT, str(exc))
    c_lists = reduce_to_Cg(r_lists, cfg.genus)
    try:
        for g, graphs in c_lists.items():
            store.write_graphs(cfg.out, g, graphs)
    except OSError as exc:
        return _fail(EXIT_INPUT, f"cannot write output: {exc}")
    for g in range(cfg.genus + 1):
        print(f"|C_{g}| = {len(c_lists[g])}")
    return EXIT_OK


def cmd_count(cfg: RunConfig) -> int:
    try:
        c_sizes = [len(store.read_graphs(cfg.out, g)) for g in range(cfg.genus + 1)]
        r_sizes = [1] + [store.read_manifest(cfg.out, g)["total"] for g in range(1, cfg.genus + 1)]
    except store.MissingData as exc:
        return _fail(EXIT_INPUT, str(exc))
    table = build_table(r_sizes, c_sizes)
    text = table.to_csv()
    try:
        Path(cfg.out).mkdir(parents=True, exist_ok=True)
        (Path(cfg.out) / "table.csv").write_text(text)
        if cfg.plot:
            from .plotting import plot_table

            plot_table(table, Path(cfg.out) / "table.png")
    except OSError as exc:
        return _fail(EXIT_INPUT, f"cannot write output: {exc}")
    print(text, end="")
    return EXIT_OK


def cmd_estimate(cfg: RunConfig) -> int:
    if cfg.genus < 1:
        return _fail(EXIT_INPUT, "estimate needs genus >= 1")
    triples = all_type_triples(cfg.genus) if cfg.edges is None else admissible_type_triples(cfg.genus, cfg.edges)
    running = 0
    keys, ests = [], []
    for t in triples:
        n = frobenius_count([t.S, t.A, t.F])
        est = capacity_estimate(t.S, t.A, t.F)
        running += est
        keys.append(t.key)
        ests.append(est)
        print(f"{t.key} {n} {est} {running}")
    if cfg.plot:
        try:
            from .plotting import plot_estimates

            Path(cfg.out).mkdir(parents=True, exist_ok=True)
            plot_estimates(keys, ests, Path(cfg.out) / f"estimate_g{cfg.genus}.png")
        except OSError as exc:
            return _fail(EXIT_INPUT, f"cannot write output: {exc}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    from .verify import suites

    status = EXIT_OK
    for name, run in suites(cfg.max_brins, inject_skip_swap=cfg.inject_fault == "skip-swap"):
        t0 = time.perf_counter()
        bad = run()
        dt = time.perf_counter() - t0
        print(f"{'PASS' if bad is None else 'FAIL'} {name} ({dt:.1f}s)")
        if bad is not None:
            print(json.dumps(bad))
            return EXIT_VERIFY
    return status


COMMANDS = {"enumerate": cmd_enumerate, "reduce": cmd_reduce, "count": cmd_count,
            "estimate": cmd_estimate, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minsep", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="mode", required=True)
    default_out = os.environ.get("MINSEP_OUT", "out")
    for mode in MODES:
        p = sub.add_parser(mode)
        p.add_argument("--genus", type=int, default=1)
        p.add_argument("--edges", type=int, default=None, help="restrict to one edge count")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--chunk-size", type=int, default=DEFAULT_CHUNK, help="class ranks per work unit")
        p.add_argument("--out", type=Path, default=Path(default_out), help="output directory ($MINSEP_OUT)")
        p.add_argument("--allow-long", action="store_true", help="permit genus >= 4 enumeration")
        p.add_argument("--no-plot", dest="plot", action="store_false", help="skip figure output")
        if mode == "verify":
            p.add_argument("--max-brins", type=int, default=5)
            p.add_argument("--inject-fault", choices=["skip-swap"], default=None, help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = RunConfig(mode=args.mode, genus=args.genus, edges=args.edges, workers=args.workers,
                    chunk_size=args.chunk_size, out=args.out, allow_long=args.allow_long,
                    plot=args.plot, max_brins=getattr(args, "max_brins", 5),
                    inject_fault=getattr(args, "inject_fault", None))
    try:
        cfg.validate()
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    return COMMANDS[cfg.mode](cfg)


if __name__ == "__main__":
    sys.exit(main())
