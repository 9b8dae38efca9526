"""Printed tables outside the numbered criteria (A3 HH^1 and truncated P^n tables)."""
import golden_tables as golden
import pytest

from bgghoch.hochschild import assemble, block, check_tau_symmetry


def _nonzero(cell):
    return {w: m for w, m in cell.items() if m}


def _check(label, J, s, rows, exhaustive):
    t = assemble(block(label, J), s)
    expected = golden.cells(rows, s, t.rank)
    for (r, c), cell in expected.items():
        assert _nonzero(t.cell(r, c)) == cell, (r, c)
    if exhaustive:
        assert set(t.nonzero_cells()) <= set(expected)
    assert check_tau_symmetry(t, t.dim_gP).ok


def test_a3_principal_hh1():
    _check("A3", (), 1, golden.A3_HH1, exhaustive=True)


@pytest.mark.parametrize("s,rows", [(6, golden.P3_HH6), (7, golden.P3_HH7)])
def test_p3_truncated(s, rows):
    _check("A3", (2, 3), s, rows, exhaustive=False)


@pytest.mark.parametrize("s,rows", [(2, golden.P4_HH2), (3, golden.P4_HH3)])
def test_p4_truncated(s, rows):
    _check("A4", (2, 3, 4), s, rows, exhaustive=False)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pn_hh1_subalgebra_dimension(n):
    """Trivial cells with i >= 1 plus C + g on the diagonal cells: n(n+1)/2 + n dim g."""
    t = assemble(block(f"A{n}", tuple(range(2, n + 1))), 1)
    adjoint, trivial = (1,) * n, (0,) * n
    dim_g = (n + 1) ** 2 - 1
    total = 0
    for r, c in t.nonzero_cells():
        cell = t.cell(r, c)
        if r > c:
            total += t.cell_dim(r, c)
        else:
            total += cell.get(trivial, 0) + cell.get(adjoint, 0) * dim_g
    assert total == n * (n + 1) // 2 + n * dim_g
