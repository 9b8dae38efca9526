from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from bgghoch.linalg import (
    independent_columns,
    nullspace_exact,
    rank_exact,
    rank_mod_p,
    solve_exact,
    transpose,
)


@st.composite
def sparse_matrices(draw, max_rows=9, max_cols=9, big=False):
    nrows = draw(st.integers(1, max_rows))
    ncols = draw(st.integers(0, max_cols))
    vals = st.integers(-10**12, 10**12) if big else st.integers(-4, 4)
    cols = []
    for _ in range(ncols):
        col = {}
        for r in range(nrows):
            if draw(st.booleans()):
                v = draw(vals)
                if v:
                    col[r] = v
        cols.append(col)
    # duplicate some columns to force dependencies
    if cols and draw(st.booleans()):
        a, b = draw(st.integers(0, len(cols) - 1)), draw(st.integers(0, len(cols) - 1))
        k = draw(st.integers(-3, 3))
        cols.append({r: cols[a].get(r, 0) + k * cols[b].get(r, 0) for r in range(nrows) if cols[a].get(r, 0) + k * cols[b].get(r, 0)})
    return nrows, cols


def _dense(nrows, cols):
    return sympy.Matrix(nrows, len(cols), lambda r, c: cols[c].get(r, 0)) if cols else sympy.zeros(nrows, 0)


@given(sparse_matrices())
def test_rank_matches_sympy(m):
    nrows, cols = m
    assert rank_exact(cols) == _dense(nrows, cols).rank()


@given(sparse_matrices(big=True))
def test_rank_with_large_entries(m):
    nrows, cols = m
    assert rank_exact(cols) == _dense(nrows, cols).rank()


@given(sparse_matrices())
def test_modular_rank_agrees_on_small_entries(m):
    _, cols = m
    assert rank_mod_p(cols) == rank_exact(cols)


@given(sparse_matrices())
def test_rank_of_transpose(m):
    nrows, cols = m
    assert rank_exact(transpose(cols, nrows)) == rank_exact(cols)


def test_rank_accepts_fractions():
    cols = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: 3, 1: 2}]
    assert rank_exact(cols) == 1


@given(sparse_matrices(), st.data())
def test_solve_exact(m, data):
    nrows, cols = m
    coeffs = [data.draw(st.integers(-3, 3)) for _ in cols]
    rhs = {}
    for c, col in zip(coeffs, cols):
        for r, v in col.items():
            rhs[r] = rhs.get(r, 0) + c * v
    rhs = {r: v for r, v in rhs.items() if v}
    sol = solve_exact(cols, rhs, nrows)
    assert sol is not None
    back = {}
    for n, x in sol.items():
        for r, v in cols[n].items():
            back[r] = back.get(r, 0) + x * v
    assert {r: v for r, v in back.items() if v} == rhs


def test_solve_exact_inconsistent():
    assert solve_exact([{0: 1}], {1: 1}, 2) is None


@given(sparse_matrices())
def test_nullspace(m):
    nrows, cols = m
    ns = nullspace_exact(cols, nrows)
    assert len(ns) == len(cols) - rank_exact(cols)
    for vec in ns:
        assert all(isinstance(v, int) for v in vec.values())
        tot = {}
        for n, x in vec.items():
            for r, v in cols[n].items():
                tot[r] = tot.get(r, 0) + x * v
        assert not any(tot.values())


@given(sparse_matrices())
def test_independent_columns_greedy(m):
    _, cols = m
    idx = independent_columns(cols)
    assert idx == sorted(idx)
    assert len(idx) == rank_exact(cols) == rank_exact([cols[i] for i in idx])
