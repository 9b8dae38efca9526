"""Table emitters (text, JSON, LaTeX), schema validation and table diffs."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema

from .hochschild import BigradedTable, format_cell
from .rootsystem import build_root_system


class TableMismatchError(ValueError):
    pass


@lru_cache(maxsize=None)
def table_schema() -> dict:
    return json.loads(resources.files("bgghoch").joinpath("table.schema.json").read_text())


def validate_table_json(data: dict) -> None:
    """Raise jsonschema.ValidationError if ``data`` is not a serialized table."""
    jsonschema.validate(data, table_schema())


def to_json_text(tables: list[BigradedTable]) -> str:
    docs = [t.to_json() for t in tables]
    for d in docs:
        validate_table_json(d)
    payload = docs[0] if len(docs) == 1 else docs
    return json.dumps(payload, indent=1, sort_keys=False) + "\n"


def _grid(t: BigradedTable):
    """Row and column labels shown for ``t``: same parity as s, up to the last nonzero cell."""
    nz = t.nonzero_cells()
    start = t.s % 2
    last_row = max((r for r, _ in nz), default=start)
    last_col = max((c for _, c in nz), default=start)
    return list(range(start, last_row + 1, 2)), list(range(start, max(last_col, start) + 1, 2))


def _cell_dim(t: BigradedTable, rs, row, col) -> int:
    return sum(m * rs.weyl_dimension(w) for w, m in t.cells.get((row, col), {}).items())


def to_text(t: BigradedTable, dims_only: bool = False) -> str:
    rs = build_root_system(t.type[0], t.rank)
    rows, cols = _grid(t)
    block = ",".join(map(str, t.block))
    lines = [f"HH^{t.s}  type {t.type}  block {{{block}}}  dim G/P = {t.dim_gP}"]
    body = []
    for r in rows:
        entries = []
        for c in cols:
            if c > r:
                entries.append("")
            elif dims_only:
                entries.append(str(_cell_dim(t, rs, r, c)))
            else:
                entries.append(format_cell(t.cells.get((r, c), {})))
        body.append((f"i+j={r}", entries))
    header = [f"j-i={c}" for c in cols]
    widths = [max([len(h)] + [len(e[n]) for _, e in body]) for n, h in enumerate(header)]
    lw = max([len("h^{i,j}")] + [len(lbl) for lbl, _ in body])
    for lbl, entries in body:
        cells = "  ".join(e.ljust(w) for e, w in zip(entries, widths))
        lines.append(f"{lbl.rjust(lw)} | {cells}".rstrip())
    lines.append("-" * (lw + 1) + "+" + "-" * (sum(widths) + 2 * len(widths)))
    lines.append(f"{'h^{i,j}'.rjust(lw)} | " + "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    lines.append(f"total dimension {t.total_dim()}, invariant part {t.invariant_dim()}")
    return "\n".join(lines) + "\n"


def latex_weight(w, m: int) -> str:
    base = r"\mathbb{C}" if not any(w) else "L_{" + ",".join(map(str, w)) + "}"
    return base + (f"^{{{m}}}" if m > 1 else "")


def latex_cell(cell: dict) -> str:
    parts = [latex_weight(w, m) for w, m in sorted(cell.items(), key=lambda wm: (sum(wm[0]), wm[0])) if m]
    return r" \oplus ".join(parts) if parts else "0"


def to_latex(t: BigradedTable, dims_only: bool = False) -> str:
    rs = build_root_system(t.type[0], t.rank)
    rows, cols = _grid(t)
    out = [r"\begin{array}{r|" + " ".join("l" for _ in cols) + "}"]
    for r in rows:
        entries = []
        for c in cols:
            if c > r:
                entries.append("")
            elif dims_only:
                entries.append(str(_cell_dim(t, rs, r, c)))
            else:
                entries.append(latex_cell(t.cells.get((r, c), {})))
        out.append("\t{\\scriptstyle i+j=%d}&" % r + "&".join(entries) + r"\\")
    out.append("\t\\hline h^{i,j}&" + "&".join("{\\scriptstyle j-i=%d}" % c for c in cols))
    out.append(r"\end{array}")
    return "\n".join(out) + "\n"


def _as_table(x) -> BigradedTable:
    if isinstance(x, BigradedTable):
        return x
    validate_table_json(x)
    return BigradedTable.from_json(x)


def diff_tables(a, b) -> list[str]:
    """Cell-by-cell multiset diff of two tables (objects or JSON dicts); empty iff equal."""
    ta, tb = _as_table(a), _as_table(b)
    ha = (ta.type, ta.rank, tuple(ta.block), ta.s)
    hb = (tb.type, tb.rank, tuple(tb.block), tb.s)
    if ha != hb:
        raise TableMismatchError(f"headers differ: {ha} vs {hb}")
    report = []
    for key in sorted(set(ta.cells) | set(tb.cells)):
        ca = {w: m for w, m in ta.cells.get(key, {}).items() if m}
        cb = {w: m for w, m in tb.cells.get(key, {}).items() if m}
        if ca != cb:
            row, col = key
            report.append(f"i+j={row} j-i={col}: {format_cell(ca)} != {format_cell(cb)}")
    return report
