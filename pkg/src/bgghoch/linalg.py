"""Exact sparse linear algebra over Q.

A sparse matrix is a list of columns, each a dict ``{row: value}`` with int
or Fraction values.  Rank is invariant under transposition, so elimination
runs on whichever side is convenient.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm

Column = dict

MERSENNE_61 = (1 << 61) - 1


def _integerize(vec: dict) -> dict:
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    out = {}
    for k, v in vec.items():
        if v:
            x = v * den
            out[k] = int(x) if not isinstance(x, int) else x
    return out


def _primitive(vec: dict) -> dict:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        return {k: v // g for k, v in vec.items()}
    return vec


def _eliminate(vectors, reduce):
    """Shared Markowitz-style elimination; ``reduce(pivot_vec, c, vec)`` returns the new vec."""
    active = {}
    colsets: dict = {}
    heap = []
    for vid, v in enumerate(vectors):
        if v:
            active[vid] = v
            heap.append((len(v), vid))
            for c in v:
                colsets.setdefault(c, set()).add(vid)
    heapq.heapify(heap)
    rank = 0
    while heap:
        n, pid = heapq.heappop(heap)
        p = active.get(pid)
        if p is None or len(p) != n:
            continue
        del active[pid]
        for c in p:
            colsets[c].discard(pid)
        c = min(p, key=lambda k: (len(colsets[k]), abs(p[k]) if not isinstance(p[k], int) or p[k] < 1 << 62 else 1 << 62))
        rank += 1
        for vid in list(colsets[c]):
            v = active[vid]
            old = set(v)
            nv = reduce(p, c, v)
            new = set(nv)
            for k in old - new:
                colsets[k].discard(vid)
            for k in new - old:
                colsets.setdefault(k, set()).add(vid)
            if nv:
                active[vid] = nv
                heapq.heappush(heap, (len(nv), vid))
            else:
                del active[vid]
    return rank


def _reduce_int(p, c, v):
    a, b = p[c], v[c]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {k: a * x for k, x in v.items()}
    for k, x in p.items():
        y = out.get(k, 0) - b * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return _primitive(out)


def rank_exact(columns) -> int:
    """Exact rank by fraction-free sparse elimination (no floating point)."""
    vecs = [_primitive(_integerize(v)) for v in columns]
    return _eliminate(vecs, _reduce_int)


def rank_mod_p(columns, p: int = MERSENNE_61) -> int:
    """Rank over GF(p); a lower bound for the rank over Q."""
    vecs = []
    for col in columns:
        v = {}
        for k, x in _integerize(col).items():
            x %= p
            if x:
                v[k] = x
        vecs.append(v)

    def reduce(piv, c, v):
        f = v[c] * pow(piv[c], -1, p) % p
        out = dict(v)
        for k, x in piv.items():
            y = (out.get(k, 0) - f * x) % p
            if y:
                out[k] = y
            else:
                out.pop(k, None)
        return out

    return _eliminate(vecs, reduce)


def transpose(columns, nrows: int | None = None):
    rows: dict = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return list(rows.values())


def _rref(columns, nrows):
    """Dense Fraction RREF of the matrix given by columns; returns (rows, pivots)."""
    ncols = len(columns)
    mat = [[Fraction(0)] * ncols for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            mat[i][j] = Fraction(v)
    pivots = []
    r = 0
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][j]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][j]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][j]:
                f = mat[i][j]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(j)
        r += 1
    return mat, pivots


def solve_exact(columns, rhs: dict, nrows: int):
    """Solve A x = rhs; returns ``{col: value}`` or None if inconsistent."""
    aug = list(columns) + [rhs]
    mat, pivots = _rref(aug, nrows)
    n = len(columns)
    if n in pivots:
        return None
    sol = {}
    for r, j in enumerate(pivots):
        if mat[r][n]:
            sol[j] = mat[r][n]
    return sol


def nullspace_exact(columns, nrows: int) -> list[dict]:
    """Basis of {x : A x = 0}, one vector per free column."""
    mat, pivots = _rref(columns, nrows)
    free = [j for j in range(len(columns)) if j not in set(pivots)]
    out = []
    for f in free:
        vec = {f: Fraction(1)}
        for r, j in enumerate(pivots):
            if mat[r][f]:
                vec[j] = -mat[r][f]
        den = lcm(*(v.denominator for v in vec.values()))
        out.append({k: int(v * den) for k, v in vec.items()})
    return out


def independent_columns(columns) -> list[int]:
    """Indices of a maximal independent subset, greedy in the given order."""
    basis: dict = {}  # pivot row -> reduced integer vector
    chosen = []
    for j, col in enumerate(columns):
        v = _primitive(_integerize(col))
        while v:
            piv = min(v)
            if piv not in basis:
                basis[piv] = v
                chosen.append(j)
                break
            v = _reduce_int(basis[piv], piv, v)
    return chosen
