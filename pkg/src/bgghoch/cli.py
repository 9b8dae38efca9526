"""Command-line entry point: ``bgghoch table ...`` and ``bgghoch diff ...``."""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .cache import RecordCache, atomic_write_text, default_cache_dir
from .emit import TableMismatchError, diff_tables, to_json_text, to_latex, to_text
from .hochschild import BlockSpec, RecordSource, assemble, check_tau_symmetry
from .rootsystem import RootSystemError, build_root_system, parse_type

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3

log = logging.getLogger("bgghoch")


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    series: str
    rank: int
    block: tuple
    s_values: list
    mode: str = "direct"
    method: str = "direct"
    jobs: int = 1
    cache_dir: Path | None = None
    use_cache: bool = True
    fmt: str = "text"
    out: str | None = None
    dims_only: bool = False
    seed: int | None = None
    stats: dict = field(default_factory=dict)

    @property
    def type_label(self) -> str:
        return f"{self.series}{self.rank}"


def parse_s_range(text: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-)\s*(\d+)\s*)?", text)
    if not m:
        raise UsageError(f"--s expects an integer or a range a..b, got {text!r}")
    a = int(m.group(1))
    b = int(m.group(2)) if m.group(2) is not None else a
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return list(range(a, b + 1))


def parse_block(text: str, rank: int) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        J = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--block expects a comma separated list of simple indices, got {text!r}") from None
    if len(set(J)) != len(J) or any(j < 1 or j > rank for j in J):
        raise UsageError(f"--block {text!r} is not a subset of 1..{rank}")
    return tuple(sorted(J))


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    try:
        rs = parse_type(ns.type)
    except (RootSystemError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if ns.jobs < 1:
        raise UsageError("--jobs must be positive")
    return JobConfig(
        series=rs.series,
        rank=rs.rank,
        block=parse_block(ns.block, rs.rank),
        s_values=parse_s_range(ns.s),
        mode=ns.mode,
        method=ns.method,
        jobs=ns.jobs,
        cache_dir=Path(ns.cache_dir) if ns.cache_dir else default_cache_dir(),
        use_cache=not ns.no_cache,
        fmt=ns.format,
        out=ns.out,
        dims_only=ns.dims_only,
        seed=ns.seed,
    )


def render(tables, fmt: str, dims_only: bool) -> str:
    if fmt == "json":
        return to_json_text(tables)
    emit = to_latex if fmt == "latex" else to_text
    return "\n".join(emit(t, dims_only) for t in tables)


def run(cfg: JobConfig):
    """Compute every table of ``cfg``; returns (tables, invariant failures)."""
    blk = BlockSpec(build_root_system(cfg.series, cfg.rank), cfg.block)
    cache = RecordCache(cfg.cache_dir, cfg.seed) if cfg.use_cache else None
    source = RecordSource(blk, cfg.method, cache, cfg.seed)
    tables, failures = [], []
    for s in cfg.s_values:
        t0 = time.perf_counter()
        t = assemble(blk, s, cfg.mode, cfg.method, cache, cfg.jobs, cfg.seed, source)
        log.info("HH^%d of %s: %.2fs", s, blk.name, time.perf_counter() - t0)
        rep = check_tau_symmetry(t, blk.n)
        if not rep.ok:
            failures.append(f"HH^{s}: tau symmetry violated at {[v[:2] for v in rep.violations]}")
        tables.append(t)
    cfg.stats.update(rank_computations=source.rank_computations)
    if cache is not None:
        cfg.stats.update(cache_hits=cache.hits, cache_misses=cache.misses, cache_discarded=cache.discarded)
    return tables, failures


def write_output(cfg: JobConfig, tables) -> None:
    if cfg.out is None:
        sys.stdout.write(render(tables, cfg.fmt, cfg.dims_only))
        return
    if "{s}" in cfg.out:
        for t in tables:
            atomic_write_text(Path(cfg.out.format(s=t.s)), render([t], cfg.fmt, cfg.dims_only))
    else:
        atomic_write_text(Path(cfg.out), render(tables, cfg.fmt, cfg.dims_only))


def cmd_table(ns) -> int:
    cfg = config_from_args(ns)
    tables, failures = run(cfg)
    write_output(cfg, tables)
    log.info("stats: %s", cfg.stats)
    for f in failures:
        print(f"invariant failure: {f}", file=sys.stderr)
    return EXIT_INVARIANT if failures else EXIT_OK


def cmd_diff(ns) -> int:
    try:
        a = json.loads(Path(ns.a).read_text())
        b = json.loads(Path(ns.b).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read tables: {exc}") from None
    a = a if isinstance(a, list) else [a]
    b = b if isinstance(b, list) else [b]
    if len(a) != len(b):
        raise UsageError(f"files hold {len(a)} and {len(b)} tables")
    report = []
    for ta, tb in zip(a, b):
        try:
            report.extend(diff_tables(ta, tb))
        except (TableMismatchError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    for line in report:
        print(line)
    return EXIT_DIFF if report else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bgghoch", description="Hochschild cohomology tables of small quantum group blocks.")
    p.add_argument("-v", "--verbose", action="store_true", help="log timings and cache statistics")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="compute bigraded HH^s tables")
    t.add_argument("--type", required=True, help="Lie type and rank, e.g. A2, G2, B3")
    t.add_argument("--block", default="", help='stabilizer subset J as a comma list; "" for the principal block')
    t.add_argument("--s", required=True, help="degree s, or a range a..b")
    t.add_argument("--mode", choices=("direct", "half-tau"), default="direct")
    t.add_argument("--method", choices=("direct", "varpi"), default="direct", help="how V-complex ranks are obtained")
    t.add_argument("--format", choices=("text", "json", "latex"), default="text")
    t.add_argument("--out", help="output path; '{s}' in the path writes one file per s")
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--cache-dir", help="cache directory (default: $BGGHOCH_CACHE_DIR or ~/.cache/bgghoch)")
    t.add_argument("--no-cache", action="store_true")
    t.add_argument("--dims-only", action="store_true", help="print cell dimensions instead of modules")
    t.add_argument("--seed", type=int, default=None, help="seed for the Bruhat sign solve")
    t.set_defaults(func=cmd_table)

    d = sub.add_parser("diff", help="compare two JSON tables cell by cell")
    d.add_argument("a")
    d.add_argument("b")
    d.set_defaults(func=cmd_diff)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return ns.func(ns)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"bgghoch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RuntimeError, AssertionError, ArithmeticError) as exc:
        print(f"bgghoch: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
