"""Bigraded tables HH^s = sum_{i+j+k=s} H^i(G/B, V_{j,k}).

Cells are indexed by ``(row, col) = (i + j, j - i)`` and hold multisets of
dominant weights (root coordinates) with multiplicities.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

from .bgg import dominant_spectrum
from .cohomology import CohomologyRecord, bgg_cohomology, bgg_cohomology_via_varpi
from .parabolic import ParabolicData, build_parabolic, build_vjk, feasible_triples
from .rootsystem import RootSystem, build_root_system


@dataclass(frozen=True)
class BlockSpec:
    """Block of the small quantum group, labelled by the stabilizer subset J (1-based)."""

    rs: RootSystem
    J: tuple = ()

    def __post_init__(self):
        J = tuple(sorted(set(int(j) for j in self.J)))
        if any(j < 1 or j > self.rs.rank for j in J):
            raise ValueError(f"block {list(J)} is not a subset of 1..{self.rs.rank}")
        object.__setattr__(self, "J", J)

    @cached_property
    def parabolic(self) -> ParabolicData:
        return build_parabolic(self.rs, self.J)

    @property
    def n(self) -> int:
        """dim G/P."""
        return self.parabolic.d

    @property
    def name(self) -> str:
        return f"{self.rs.name}" + (f"/u{''.join(map(str, self.J))}" if self.J else "")


def block(label: str, J=()) -> BlockSpec:
    return BlockSpec(build_root_system(label[0], int(label[1:])), tuple(J))


def enumerate_cells(blk: BlockSpec, s: int) -> list[tuple[int, int, int]]:
    """All (i, j, k) with i + j + k = s, k even and V_{j,k} nonzero."""
    n = blk.n
    out = []
    for i in range(n + 1):
        for j in range(2 * n + 1):
            k = s - i - j
            if k % 2 == 0 and feasible_triples(n, j, k):
                out.append((i, j, k))
    return out


@dataclass
class BigradedTable:
    """One HH^s table.  ``cells[(row, col)]`` maps weights to multiplicities."""

    type: str
    rank: int
    block: tuple
    s: int
    dim_gP: int
    cells: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    @property
    def rs(self) -> RootSystem:
        return build_root_system(self.type[0], self.rank)

    def add(self, i: int, j: int, k: int, lam, mult: int):
        if not mult:
            return
        cell = self.cells.setdefault((i + j, j - i), {})
        cell[tuple(lam)] = cell.get(tuple(lam), 0) + mult
        prov = self.provenance.setdefault((i + j, j - i), [])
        if (i, j, k) not in prov:
            prov.append((i, j, k))

    def cell(self, row: int, col: int) -> dict:
        return dict(self.cells.get((row, col), {}))

    def cell_dim(self, row: int, col: int) -> int:
        rs = self.rs
        return sum(m * rs.weyl_dimension(w) for w, m in self.cells.get((row, col), {}).items())

    def total_dim(self) -> int:
        return sum(self.cell_dim(r, c) for r, c in self.cells)

    def invariant_dim(self) -> int:
        zero = (0,) * self.rank
        return sum(cell.get(zero, 0) for cell in self.cells.values())

    def nonzero_cells(self):
        return sorted(k for k, v in self.cells.items() if any(v.values()))

    def to_json(self) -> dict:
        cells = []
        for row, col in self.nonzero_cells():
            entries = [{"weight": list(w), "mult": m} for w, m in sorted(self.cells[(row, col)].items()) if m]
            cells.append({"row": row, "col": col, "entries": entries})
        return {
            "type": self.type,
            "rank": self.rank,
            "block": list(self.block),
            "s": self.s,
            "dim_gP": self.dim_gP,
            "cells": cells,
            "total_dim": self.total_dim(),
            "invariant_dim": self.invariant_dim(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "BigradedTable":
        t = cls(data["type"], data["rank"], tuple(data["block"]), data["s"], data["dim_gP"])
        for c in data["cells"]:
            t.cells[(c["row"], c["col"])] = {tuple(e["weight"]): e["mult"] for e in c["entries"]}
        return t


class RecordSource:
    """Computes (and optionally caches) cohomology records for one block."""

    def __init__(self, blk: BlockSpec, method: str = "direct", cache=None, seed=None):
        self.blk = blk
        self.method = method
        self.cache = cache
        self.seed = seed
        self.rank_computations = 0

    def records(self, j: int, k: int, degrees) -> dict:
        """{lam: CohomologyRecord} for V_{j,k}, covering at least ``degrees``."""
        blk = self.blk
        spectrum = self.cache.get_spectrum(blk, j, k) if self.cache else None
        fam = None
        if spectrum is None:
            fam = build_vjk(blk.parabolic, j, k)
            spectrum = dominant_spectrum(fam.V)
            if self.cache:
                self.cache.put_spectrum(blk, j, k, spectrum)
        out = {}
        for lam in spectrum:
            rec = self.cache.get(blk, j, k, lam, self.method) if self.cache else None
            missing = [i for i in degrees if rec is None or i >= len(rec.dims) or rec.dims[i] is None]
            if missing:
                if fam is None:
                    fam = build_vjk(blk.parabolic, j, k)
                self.rank_computations += 1
                if self.method == "varpi":
                    new = bgg_cohomology_via_varpi(fam, lam, missing, self.seed)
                else:
                    new = bgg_cohomology(fam.V, lam, missing, self.seed)
                rec = merge_records(rec, new)
                if self.cache:
                    self.cache.put(blk, j, k, lam, self.method, rec)
            out[lam] = rec
        return out


def merge_records(old: CohomologyRecord | None, new: CohomologyRecord) -> CohomologyRecord:
    if old is None:
        return new
    dims = list(old.dims)
    for i, d in enumerate(new.dims):
        if d is not None:
            if dims[i] is not None and dims[i] != d:
                raise RuntimeError(f"inconsistent cached record for {new.label} at {new.lam}")
            dims[i] = d
    return CohomologyRecord(new.label, new.lam, dims, new.method, new.space_dims)


def _task(args):
    blk_type, J, method, seed, cache_root, j, k, degrees = args
    blk = block(blk_type, J)
    cache = None
    if cache_root is not None:
        from .cache import RecordCache

        cache = RecordCache(cache_root, seed)
    src = RecordSource(blk, method, cache, seed)
    recs = src.records(j, k, degrees)
    stats = (cache.hits, cache.misses, cache.discarded) if cache else (0, 0, 0)
    return (j, k), recs, src.rank_computations, stats


def _cell_groups(blk: BlockSpec, s: int, half: bool):
    groups: dict = {}
    for i, j, k in enumerate_cells(blk, s):
        if half and j > blk.n:
            continue
        groups.setdefault((j, k), []).append(i)
    return groups


def assemble(
    blk: BlockSpec,
    s: int,
    mode: str = "direct",
    method: str = "direct",
    cache=None,
    jobs: int = 1,
    seed=None,
    source: RecordSource | None = None,
) -> BigradedTable:
    """Assemble HH^s; ``mode="half-tau"`` computes j <= n and mirrors the rest."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    if mode not in ("direct", "half-tau"):
        raise ValueError(f"unknown mode {mode!r}")
    half = mode == "half-tau"
    groups = _cell_groups(blk, s, half)
    results = {}
    src = source or RecordSource(blk, method, cache, seed)
    if jobs > 1 and len(groups) > 1:
        # workers share the cache through the file system; entries are disjoint per (j, k)
        root = str(cache.root) if cache is not None else None
        args = [(blk.rs.name, blk.J, method, seed, root, j, k, tuple(ii)) for (j, k), ii in sorted(groups.items())]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for key, recs, count, stats in pool.map(_task, args):
                results[key] = recs
                src.rank_computations += count
                if cache is not None:
                    cache.hits += stats[0]
                    cache.misses += stats[1]
                    cache.discarded += stats[2]
    else:
        for (j, k), ii in sorted(groups.items()):
            results[(j, k)] = src.records(j, k, ii)
    table = BigradedTable(blk.rs.name, blk.rs.rank, blk.J, s, blk.n)
    for (j, k), ii in sorted(groups.items()):
        for lam, rec in sorted(results[(j, k)].items()):
            for i in ii:
                table.add(i, j, k, lam, rec.dims[i])
    if half:
        table = half_table_complete(table, blk.n)
    return table


@dataclass
class TauReport:
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def check_tau_symmetry(t: BigradedTable, n: int) -> TauReport:
    """Cell (i, n - a) must equal cell (i, n + a) for every i and a."""
    violations = []
    for i in range(n + 1):
        for a in range(1, n + 1):
            lo = t.cell(i + n - a, n - a - i)
            hi = t.cell(i + n + a, n + a - i)
            lo = {w: m for w, m in lo.items() if m}
            hi = {w: m for w, m in hi.items() if m}
            if lo != hi:
                violations.append(((i, n - a), (i, n + a), lo, hi))
    return TauReport(violations)


def half_table_complete(t: BigradedTable, n: int) -> BigradedTable:
    """Mirror the cells with j <= n to j' = 2n - j (same i)."""
    out = BigradedTable(t.type, t.rank, t.block, t.s, t.dim_gP)
    for (row, col), cell in t.cells.items():
        i, j = (row - col) // 2, (row + col) // 2
        if j > n:
            raise ValueError(f"partial table already has a cell with j = {j} > {n}")
        for lam, m in cell.items():
            out.add(i, j, t.s - i - j, lam, m)
            if j < n:
                j2 = 2 * n - j
                out.add(i, j2, t.s - i - j2, lam, m)
    return out


def table_labels(t: BigradedTable) -> dict:
    """Human-readable cell contents, e.g. ``{(8, 2): "C^2+L21^2"}``."""
    return {(r, c): format_cell(t.cells[(r, c)]) for r, c in t.nonzero_cells()}


def weight_label(w) -> str:
    if not any(w):
        return "C"
    if all(0 <= x < 10 for x in w):
        return "L" + "".join(map(str, w))
    return "L(" + ",".join(map(str, w)) + ")"


def format_cell(cell: dict) -> str:
    parts = []
    for w, m in sorted(cell.items(), key=lambda wm: (sum(wm[0]), wm[0])):
        if m:
            parts.append(weight_label(w) + (f"^{m}" if m > 1 else ""))
    return "+".join(parts) if parts else "0"
