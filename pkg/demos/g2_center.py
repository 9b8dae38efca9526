"""Center of the principal block for G2 and its two singular blocks.

Prints the three s = 0 tables with totals, the cells where the singular
tables differ, and the tau check.

Run: python3 demos/g2_center.py
"""
from bgghoch.emit import to_text
from bgghoch.hochschild import assemble, block, check_tau_symmetry, format_cell


def main():
    tables = {}
    for J in [(), (1,), (2,)]:
        blk = block("G2", J)
        t = assemble(blk, 0)
        tables[J] = t
        print(to_text(t))
        print(f"tau symmetric: {check_tau_symmetry(t, blk.n).ok}")
        print()

    u1, u2 = tables[(1,)], tables[(2,)]
    cells = sorted(set(u1.nonzero_cells()) | set(u2.nonzero_cells()))
    for r, c in cells:
        a, b = format_cell(u1.cell(r, c)), format_cell(u2.cell(r, c))
        if a != b:
            print(f"u1 and u2 differ at i+j={r} j-i={c}: {a} vs {b}")


if __name__ == "__main__":
    main()
