"""Parabolic data and the p-modules M_{j,k}, V_{j,k}, T_{j,k}.

Notation.  ``n_p`` is spanned by the ``f_beta`` with beta outside the Levi,
``u_p`` by the matching ``e_beta``.  The symmetric algebra is generated by
the dual basis ``phi_t = f_t^*`` of ``n_p``, which has the weight of ``e_t``.

Basis keys
    M and V: ``(s, g, n)`` with ``s`` an exponent tuple over ``n_p``, ``g`` a
    strictly increasing tuple of Chevalley-basis indices (the Lambda g part)
    and ``n`` a strictly increasing tuple of ``n_p`` indices.  The wedge is
    read as ``g_1 ^ ... ^ g_r ^ n_1 ^ ... ^ n_m``.  V keys are the M keys whose
    ``g`` lies in ``u_p`` (the section psi is the inclusion).
    pre-T: ``(s, x, g, n)`` with ``x`` the index of a basis vector of p.

The p-action on V is ``varpi(x . psi(v))`` where ``varpi`` replaces every
p-factor ``y`` by ``-ad(y) = -sum_t phi_t (x) [y, f_t]``.
"""
from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from functools import cached_property
from itertools import combinations, combinations_with_replacement, product
from math import comb

from .linalg import independent_columns, solve_exact
from .rootsystem import RootSystem, chevalley_basis

Key = tuple


def _insert(seq: tuple, y: int):
    """Insert y into the increasing tuple seq; returns (sign, new) or None."""
    pos = bisect_left(seq, y)
    if pos < len(seq) and seq[pos] == y:
        return None
    return (-1 if pos & 1 else 1), seq[:pos] + (y,) + seq[pos:]


def _addto(out: dict, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


class ParabolicData:
    """Standard parabolic p containing the negative Borel b = h + n.

    ``J`` holds 1-based simple indices generating the Levi; ``J = ()`` is
    the Borel itself.
    """

    def __init__(self, rs: RootSystem, J=()):
        J = tuple(sorted(set(int(j) for j in J)))
        if any(j < 1 or j > rs.rank for j in J):
            raise ValueError(f"block {J} is not a subset of 1..{rs.rank}")
        self.rs = rs
        self.J = J
        jz = {j - 1 for j in J}
        self.levi_roots = [b for b in rs.positive_roots if all(b[i] == 0 for i in range(rs.rank) if i not in jz)]
        levi = set(self.levi_roots)
        self.np_roots = [b for b in rs.positive_roots if b not in levi]
        cb = self.cb = chevalley_basis(rs)
        self.d = len(self.np_roots)
        self.n_g = [cb.f(b) for b in self.np_roots]
        self.u_g = [cb.e(b) for b in self.np_roots]
        self.u_set = frozenset(self.u_g)
        self.np_of_g = {g: t for t, g in enumerate(self.n_g)}
        self.p_g = sorted(
            [cb.e(b) for b in self.levi_roots] + [cb.h(i) for i in range(rs.rank)] + [cb.f(b) for b in rs.positive_roots]
        )
        self.in_p = frozenset(self.p_g)
        # ad_np[x][t] = [x, f_t] in n_p coordinates, for x in p
        self.ad_np = {}
        for x in self.p_g:
            rows = []
            for t, g in enumerate(self.n_g):
                br = cb.table[x][g]
                assert all(k in self.np_of_g for k in br), "p must normalize n_p"
                rows.append({self.np_of_g[k]: v for k, v in br.items()})
            self.ad_np[x] = rows
        # coad[x][t]: x . phi_t = -sum_{t'} phi_t([x, f_t']) phi_t'
        self.coad = {}
        for x in self.p_g:
            rows = [dict() for _ in range(self.d)]
            for t2, br in enumerate(self.ad_np[x]):
                for t, v in br.items():
                    rows[t][t2] = rows[t].get(t2, 0) - v
            self.coad[x] = rows
        self.sym_weights = list(self.np_roots)
        self.n_weights = [tuple(-c for c in b) for b in self.np_roots]

    @property
    def dim_GP(self) -> int:
        return self.d

    def f_index(self, b: int) -> int:
        """Chevalley index of f_beta for the positive-root index b."""
        return self.cb.f(self.rs.positive_roots[b])

    def __repr__(self):
        return f"ParabolicData({self.rs.name}, J={list(self.J)})"


def build_parabolic(rs: RootSystem, J=()) -> ParabolicData:
    return ParabolicData(rs, J)


# -- graded pieces ------------------------------------------------------------

def _sym_piece(weights, r):
    d = len(weights)
    out: dict = {}
    rank = len(weights[0]) if weights else 0
    for combo in combinations_with_replacement(range(d), r):
        e = [0] * d
        w = [0] * rank
        for t in combo:
            e[t] += 1
            for i in range(rank):
                w[i] += weights[t][i]
        out.setdefault(tuple(w), []).append(tuple(e))
    return out


def _wedge_piece(indices, weights, r, rank):
    out: dict = {}
    for combo in combinations(range(len(indices)), r):
        w = [0] * rank
        for t in combo:
            for i in range(rank):
                w[i] += weights[t][i]
        out.setdefault(tuple(w), []).append(tuple(indices[t] for t in combo))
    return out


def _key_weight(pd: ParabolicData, s, g, n):
    rank = pd.rs.rank
    w = [0] * rank
    for t, e in enumerate(s):
        if e:
            b = pd.np_roots[t]
            for i in range(rank):
                w[i] += e * b[i]
    for a in g:
        wa = pd.cb.weights[a]
        for i in range(rank):
            w[i] += wa[i]
    for t in n:
        b = pd.np_roots[t]
        for i in range(rank):
            w[i] -= b[i]
    return tuple(w)


class WeightedModule:
    """Finite-dimensional weight module for the negative Borel.

    Subclasses provide ``components`` (tensor pieces indexed by weight) and
    ``_act(x, key)`` for Chevalley indices ``x`` of root vectors ``f_beta``.
    """

    label = "E"

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._act_memo: dict = {}
        self._basis_memo: dict = {}

    # subclass hooks
    def components(self):
        return []

    def _act(self, x: int, key) -> dict:
        raise NotImplementedError

    @cached_property
    def weight_multiplicities(self) -> dict:
        out: dict = {}
        for pieces in self.components():
            for combo in product(*(p.items() for p in pieces)):
                w = combo[0][0]
                for wt, _ in combo[1:]:
                    w = _wadd(w, wt)
                n = 1
                for _, lst in combo:
                    n *= len(lst)
                out[w] = out.get(w, 0) + n
        return out

    def weights(self):
        return sorted(self.weight_multiplicities)

    @property
    def dim(self) -> int:
        return sum(self.weight_multiplicities.values())

    def basis(self, weight) -> list:
        weight = tuple(weight)
        hit = self._basis_memo.get(weight)
        if hit is not None:
            return hit
        keys = []
        if weight in self.weight_multiplicities:
            for pieces in self.components():
                *head, last = pieces
                for combo in product(*(p.items() for p in head)):
                    w = weight
                    for wt, _ in combo:
                        w = tuple(a - b for a, b in zip(w, wt))
                    tail = last.get(w)
                    if not tail:
                        continue
                    for parts in product(*(lst for _, lst in combo), tail):
                        keys.append(self._make_key(parts))
        keys.sort()
        self._basis_memo[weight] = keys
        return keys

    def _make_key(self, parts):
        return tuple(parts)

    def act(self, b: int, key) -> dict:
        """f_beta . key for the positive-root index ``b``."""
        mk = (b, key)
        hit = self._act_memo.get(mk)
        if hit is None:
            hit = self._act(self.rs_f_index(b), key)
            self._act_memo[mk] = hit
        return hit

    def rs_f_index(self, b: int) -> int:
        cb = chevalley_basis(self.rs)
        return cb.f(self.rs.positive_roots[b])

    def act_simple(self, i: int, key) -> dict:
        if not 0 <= i < self.rs.rank:
            raise IndexError(f"simple index {i} out of range")
        return self.act(self.rs.root_index[self.rs.simple_roots[i]], key)

    def act_vector(self, b: int, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            for k2, c2 in self.act(b, key).items():
                _addto(out, k2, c * c2)
        return out

    def f_matrix(self, b: int, weight):
        """Sparse columns of f_beta : E[weight] -> E[weight - beta]."""
        beta = self.rs.positive_roots[b]
        tgt = self.basis(tuple(a - c for a, c in zip(weight, beta)))
        idx = {k: n for n, k in enumerate(tgt)}
        cols = []
        for key in self.basis(weight):
            cols.append({idx[k]: v for k, v in self.act(b, key).items()})
        return cols

    def f_action(self, i: int, weight):
        """Matrix of the simple generator f_i on a weight space."""
        return self.f_matrix(self.rs.root_index[self.rs.simple_roots[i]], weight)

    def weight_of(self, key):
        raise NotImplementedError

    def __repr__(self):
        return f"{self.label}[dim {self.dim}]"


def commutator_action(E: WeightedModule, a: int, b: int, key) -> dict:
    """[f_a, f_b] . key computed from the actions of f_a and f_b."""
    out: dict = {}
    for k1, c1 in E.act(b, key).items():
        for k2, c2 in E.act(a, k1).items():
            _addto(out, k2, c1 * c2)
    for k1, c1 in E.act(a, key).items():
        for k2, c2 in E.act(b, k1).items():
            _addto(out, k2, -c1 * c2)
    return out


class TrivialModule(WeightedModule):
    label = "C"

    def weight_of(self, key):
        return (0,) * self.rs.rank

    def components(self):
        return [[{(0,) * self.rs.rank: [()]}]]

    def _act(self, x, key):
        return {}


class _ParabolicModule(WeightedModule):
    def __init__(self, pd: ParabolicData, j: int, k: int):
        if k % 2:
            raise ValueError(f"k = {k} is odd; the internal grading only takes even values")
        if j < 0:
            raise ValueError("j must be nonnegative")
        super().__init__(pd.rs)
        self.pd = pd
        self.j = j
        self.k = k
        self.half = k // 2

    def _sym(self, r):
        return _cached_sym(self.pd, r)

    def _n_wedge(self, r):
        return _cached_wedge(self.pd, "n", r)

    def weight_of(self, key):
        s, g, n = key
        return _key_weight(self.pd, s, g, n)

    # Leibniz rule pieces shared by M, V and pre-T
    def _act_sym(self, x, s, emit):
        coad = self.pd.coad[x]
        for t, e in enumerate(s):
            if e:
                for t2, c in coad[t].items():
                    ns = list(s)
                    ns[t] -= 1
                    ns[t2] += 1
                    emit(tuple(ns), e * c)

    def _act_wedge_g(self, x, g, emit):
        row = self.pd.cb.table[x]
        for q, a in enumerate(g):
            br = row[a]
            if not br:
                continue
            rest = g[:q] + g[q + 1:]
            for y, c in br.items():
                ins = _insert(rest, y)
                if ins:
                    sg, ng = ins
                    emit(ng, c * sg * (-1 if q & 1 else 1))

    def _act_wedge_n(self, x, n, emit):
        ad = self.pd.ad_np[x]
        for q, t in enumerate(n):
            br = ad[t]
            if not br:
                continue
            rest = n[:q] + n[q + 1:]
            for y, c in br.items():
                ins = _insert(rest, y)
                if ins:
                    sg, nn = ins
                    emit(nn, c * sg * (-1 if q & 1 else 1))


_SYM_CACHE: dict = {}
_WEDGE_CACHE: dict = {}


def _cached_sym(pd: ParabolicData, r):
    key = (pd.rs.name, pd.J, r)
    if key not in _SYM_CACHE:
        _SYM_CACHE[key] = _sym_piece(pd.sym_weights, r) if pd.d else ({(0,) * pd.rs.rank: [()]} if r == 0 else {})
    return _SYM_CACHE[key]


def _cached_wedge(pd: ParabolicData, which, r):
    key = (pd.rs.name, pd.J, which, r)
    if key not in _WEDGE_CACHE:
        cb = pd.cb
        rank = pd.rs.rank
        if which == "n":
            _WEDGE_CACHE[key] = _wedge_piece(list(range(pd.d)), pd.n_weights, r, rank)
        elif which == "u":
            _WEDGE_CACHE[key] = _wedge_piece(pd.u_g, [cb.weights[g] for g in pd.u_g], r, rank)
        elif which == "g":
            idx = list(range(cb.dim))
            _WEDGE_CACHE[key] = _wedge_piece(idx, cb.weights, r, rank)
        else:
            _WEDGE_CACHE[key] = _wedge_piece(pd.p_g, [cb.weights[g] for g in pd.p_g], r, rank)
    return _WEDGE_CACHE[key]


class MModule(_ParabolicModule):
    """M_{j,k} = sum_r S^{j-r+k/2} (x) Lambda^r g (x) Lambda^{j-r} n_p."""

    def __init__(self, pd, j, k):
        super().__init__(pd, j, k)
        self.label = f"M({j},{k})"

    def components(self):
        out = []
        for r in range(self.j + 1):
            sd = self.j - r + self.half
            if sd < 0 or self.j - r > self.pd.d:
                continue
            out.append([self._sym(sd), _cached_wedge(self.pd, "g", r), self._n_wedge(self.j - r)])
        return [c for c in out if all(c)]

    def _act(self, x, key):
        s, g, n = key
        out: dict = {}
        self._act_sym(x, s, lambda ns, c: _addto(out, (ns, g, n), c))
        self._act_wedge_g(x, g, lambda ng, c: _addto(out, (s, ng, n), c))
        self._act_wedge_n(x, n, lambda nn, c: _addto(out, (s, g, nn), c))
        return out


def feasible_triples(d: int, j: int, k: int):
    """(r1, r2, r3) with r2 + r3 = j, r1 - r3 = k/2 and all pieces nonzero."""
    out = []
    for r3 in range(0, min(j, d) + 1):
        r2 = j - r3
        r1 = k // 2 + r3
        if r1 < 0 or r2 > d:
            continue
        out.append((r1, r2, r3))
    return out


def dim_V_formula(d: int, j: int, k: int) -> int:
    return sum(comb(d + r1 - 1, r1) * comb(d, r2) * comb(d, r3) for r1, r2, r3 in feasible_triples(d, j, k))


class VModule(_ParabolicModule):
    """V_{j,k}, realized on psi-image keys with the varpi-induced action."""

    def __init__(self, pd, j, k):
        super().__init__(pd, j, k)
        self.label = f"V({j},{k})"
        self._varpi_memo: dict = {}

    def components(self):
        if self.pd.d == 0:
            return [[{(0,) * self.rs.rank: [()]}] * 3] if self.j == 0 and self.k == 0 else []
        return [
            [self._sym(r1), _cached_wedge(self.pd, "u", r2), self._n_wedge(r3)]
            for r1, r2, r3 in feasible_triples(self.pd.d, self.j, self.k)
        ]

    def varpi_key(self, key) -> dict:
        """Image of an M key under varpi, in V keys."""
        hit = self._varpi_memo.get(key)
        if hit is not None:
            return hit
        s, g, n = key
        in_p = self.pd.in_p
        q = next((q for q, a in enumerate(g) if a in in_p), None)
        if q is None:
            res = {key: 1}
        else:
            a = g[q]
            base = self.varpi_key((s, g[:q] + g[q + 1:], n))
            sign0 = -1 if q & 1 else 1
            ad = self.pd.ad_np[a]
            res: dict = {}
            for (s2, g2, n2), c in base.items():
                sg2 = -1 if len(g2) & 1 else 1
                for t in range(self.pd.d):
                    for u, cu in ad[t].items():
                        ins = _insert(n2, u)
                        if not ins:
                            continue
                        sg, nn = ins
                        ns = list(s2)
                        ns[t] += 1
                        _addto(res, (tuple(ns), g2, nn), -c * cu * sign0 * sg * sg2)
        self._varpi_memo[key] = res
        return res

    def varpi_vector(self, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            for k2, c2 in self.varpi_key(key).items():
                _addto(out, k2, c * c2)
        return out

    def _act(self, x, key):
        s, g, n = key
        out: dict = {}

        def emit_g(ng, c):
            for k2, c2 in self.varpi_key((s, ng, n)).items():
                _addto(out, k2, c * c2)

        self._act_sym(x, s, lambda ns, c: _addto(out, (ns, g, n), c))
        self._act_wedge_g(x, g, emit_g)
        self._act_wedge_n(x, n, lambda nn, c: _addto(out, (s, g, nn), c))
        return out


class PreTModule(_ParabolicModule):
    """sum_r S^{j-1-r+k/2} (x) p (x) Lambda^r g (x) Lambda^{j-1-r} n_p, with Delta into M."""

    def __init__(self, pd, j, k):
        super().__init__(pd, j, k)
        self.label = f"preT({j},{k})"

    def components(self):
        if self.j == 0:
            return []
        pp = _p_piece(self.pd)
        out = []
        for r in range(self.j):
            sd = self.j - 1 - r + self.half
            if sd < 0 or self.j - 1 - r > self.pd.d:
                continue
            out.append([self._sym(sd), pp, _cached_wedge(self.pd, "g", r), self._n_wedge(self.j - 1 - r)])
        return [c for c in out if all(c)]

    def _make_key(self, parts):
        s, (x,), g, n = parts
        return (s, x, g, n)

    def _act(self, y, key):
        s, x, g, n = key
        out: dict = {}
        self._act_sym(y, s, lambda ns, c: _addto(out, (ns, x, g, n), c))
        for x2, c in self.pd.cb.table[y][x].items():
            _addto(out, (s, x2, g, n), c)
        self._act_wedge_g(y, g, lambda ng, c: _addto(out, (s, x, ng, n), c))
        self._act_wedge_n(y, n, lambda nn, c: _addto(out, (s, x, g, nn), c))
        return out

    def weight_of(self, key):
        s, x, g, n = key
        return _key_weight(self.pd, s, (x,) + g, n)

    def delta(self, key) -> dict:
        """Delta(s (x) x (x) y (x) w) = (x + ad x) ^ (y ^ w), as an M vector."""
        s, x, g, n = key
        out: dict = {}
        ins = _insert(g, x)
        if ins:
            sg, ng = ins
            _addto(out, (s, ng, n), sg)
        sgr = -1 if len(g) & 1 else 1
        for t, br in enumerate(self.pd.ad_np[x]):
            for u, c in br.items():
                ins = _insert(n, u)
                if not ins:
                    continue
                sg, nn = ins
                ns = list(s)
                ns[t] += 1
                _addto(out, (tuple(ns), g, nn), c * sg * sgr)
        return out

    def delta_vector(self, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            for k2, c2 in self.delta(key).items():
                _addto(out, k2, c * c2)
        return out


def _p_piece(pd):
    key = (pd.rs.name, pd.J, "p1")
    if key not in _WEDGE_CACHE:
        out: dict = {}
        for x in pd.p_g:
            out.setdefault(pd.cb.weights[x], []).append((x,))
        _WEDGE_CACHE[key] = out
    return _WEDGE_CACHE[key]


class TModule(WeightedModule):
    """T_{j,k} realized as the image of Delta inside M_{j,k}.

    A basis of each weight space is a maximal set of pre-T keys with
    independent Delta-images (greedy in key order).
    """

    def __init__(self, pre: PreTModule, M: MModule):
        super().__init__(pre.rs)
        self.pre = pre
        self.M = M
        self.label = f"T({pre.j},{pre.k})"
        self._wmemo: dict = {}

    def components(self):
        return self.pre.components()

    @cached_property
    def weight_multiplicities(self) -> dict:
        out = {}
        for w in self.pre.weight_multiplicities:
            n = len(self._weight_data(w)[0])
            if n:
                out[w] = n
        return out

    def _weight_data(self, weight):
        weight = tuple(weight)
        hit = self._wmemo.get(weight)
        if hit is None:
            keys = self.pre.basis(weight)
            images = [self.pre.delta(k) for k in keys]
            mkeys = sorted({m for im in images for m in im})
            midx = {m: n for n, m in enumerate(mkeys)}
            cols = [{midx[m]: v for m, v in im.items()} for im in images]
            chosen = independent_columns(cols)
            hit = ([keys[n] for n in chosen], [images[n] for n in chosen])
            self._wmemo[weight] = hit
        return hit

    def basis(self, weight):
        return self._weight_data(weight)[0]

    def weight_of(self, key):
        return self.pre.weight_of(key)

    def image_of(self, key) -> dict:
        keys, images = self._weight_data(self.pre.weight_of(key))
        return images[keys.index(key)]

    def act(self, b: int, key) -> dict:
        mk = (b, key)
        hit = self._act_memo.get(mk)
        if hit is not None:
            return hit
        x = self.rs_f_index(b)
        img = self.pre.delta_vector(self.pre._act(x, key))
        beta = self.rs.positive_roots[b]
        w = tuple(a - c for a, c in zip(self.pre.weight_of(key), beta))
        keys, images = self._weight_data(w)
        if not img:
            res = {}
        else:
            mkeys = sorted({m for im in images for m in im} | set(img))
            midx = {m: n for n, m in enumerate(mkeys)}
            cols = [{midx[m]: v for m, v in im.items()} for im in images]
            sol = solve_exact(cols, {midx[m]: v for m, v in img.items()}, len(mkeys))
            if sol is None:
                raise RuntimeError("Delta image is not a submodule")
            res = {keys[n]: v for n, v in sol.items() if v}
        self._act_memo[mk] = res
        return res


class VjkFamily:
    """V_{j,k} together with its presentation T -> M -> V."""

    def __init__(self, pd: ParabolicData, j: int, k: int):
        if k % 2:
            raise ValueError(f"k = {k} is odd; the internal grading only takes even values")
        self.parabolic = pd
        self.j = j
        self.k = k
        self.V = VModule(pd, j, k)

    @cached_property
    def M(self) -> MModule:
        return MModule(self.parabolic, self.j, self.k)

    @cached_property
    def pre_T(self) -> PreTModule:
        return PreTModule(self.parabolic, self.j, self.k)

    @cached_property
    def T(self) -> TModule:
        return TModule(self.pre_T, self.M)

    def varpi_matrix(self, weight):
        """Columns: M[weight] basis; rows: V[weight] basis."""
        vb = self.V.basis(weight)
        idx = {k: n for n, k in enumerate(vb)}
        return [{idx[k]: v for k, v in self.V.varpi_key(m).items()} for m in self.M.basis(weight)]

    def delta_matrix(self, weight):
        """Columns: T[weight] basis; rows: M[weight] basis."""
        mb = self.M.basis(weight)
        idx = {k: n for n, k in enumerate(mb)}
        _, images = self.T._weight_data(weight)
        return [{idx[k]: v for k, v in im.items()} for im in images]

    def __repr__(self):
        return f"VjkFamily({self.parabolic.rs.name}, J={list(self.parabolic.J)}, j={self.j}, k={self.k})"


def build_vjk(pd: ParabolicData, j: int, k: int) -> VjkFamily:
    return VjkFamily(pd, j, k)


def vector_weight_check(E: WeightedModule, key) -> None:
    """Assert every f_beta moves ``key`` down by beta (debug helper)."""
    w = E.weight_of(key)
    for b, beta in enumerate(E.rs.positive_roots):
        tgt = tuple(a - c for a, c in zip(w, beta))
        for k2 in E.act(b, key):
            assert E.weight_of(k2) == tgt


def as_fraction_vector(vec: dict) -> dict:
    return {k: Fraction(v) for k, v in vec.items()}
