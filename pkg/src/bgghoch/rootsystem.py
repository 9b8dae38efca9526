"""Finite root systems, Chevalley structure constants and Weyl groups.

Weights are plain integer tuples in simple-root coordinates, so
``(2, 1)`` in type G2 is ``2*alpha_1 + alpha_2``.  Simple roots follow the
Bourbaki numbering; in G2 the first simple root is short.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

Weight = tuple[int, ...]

_SERIES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


def _gram_matrix(series: str, rank: int) -> np.ndarray:
    """Integer Gram matrix (alpha_i, alpha_j) of the simple roots."""
    if series not in _SERIES:
        raise RootSystemError(f"unknown series {series!r}; expected one of {_SERIES}")
    if rank < 1:
        raise RootSystemError("rank must be positive")
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if not valid[series]:
        raise RootSystemError(f"{series}{rank} is not a finite type")

    g = np.zeros((rank, rank), dtype=np.int64)
    if series in "ADE":
        for i in range(rank):
            g[i, i] = 2
        if series == "A":
            edges = [(i, i + 1) for i in range(rank - 1)]
        elif series == "D":
            edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
        else:
            # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
            edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, rank - 1)]
        for a, b in edges:
            g[a, b] = g[b, a] = -1
    elif series == "B":
        for i in range(rank - 1):
            g[i, i] = 4
        g[rank - 1, rank - 1] = 2
        for i in range(rank - 1):
            g[i, i + 1] = g[i + 1, i] = -2
    elif series == "C":
        for i in range(rank - 1):
            g[i, i] = 2
        g[rank - 1, rank - 1] = 4
        for i in range(rank - 2):
            g[i, i + 1] = g[i + 1, i] = -1
        g[rank - 2, rank - 1] = g[rank - 1, rank - 2] = -2
    elif series == "F":
        g[:] = [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    else:
        g[:] = [[2, -3], [-3, 6]]
    return g


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _is_positive(a):
    return any(x > 0 for x in a)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element, identified by its matrix on root coordinates.

    ``matrix[r][c]`` is the r-th coordinate of the image of the c-th simple
    root.  ``word`` is a reduced word ``(i_1, ..., i_k)`` with 0-based indices
    meaning ``s_{i_1} ... s_{i_k}``.
    """

    matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...]
    shift: Weight  # w(rho) - rho, always integral

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def apply(self, mu: Weight) -> Weight:
        return tuple(sum(row[c] * mu[c] for c in range(len(mu))) for row in self.matrix)

    def dot(self, mu: Weight) -> Weight:
        """The dot action w(mu + rho) - rho."""
        return _add(self.apply(mu), self.shift)

    def __repr__(self):
        word = "".join(f"s{i + 1}" for i in self.word) or "e"
        return f"WeylElement({word})"


@dataclass(frozen=True)
class DotOrbitInfo:
    """Result of :func:`is_dot_dominant`.

    ``status`` is one of ``"dominant"``, ``"singular"`` or ``"neither"``.
    For non-singular weights ``dominant`` is the dominant element of the
    dot-orbit and ``element`` satisfies ``element.dot(mu) == dominant``;
    ``sign`` is ``(-1)**element.length``.
    """

    status: str
    dominant: Weight | None = None
    element: WeylElement | None = None
    sign: int = 1


@dataclass(frozen=True)
class BruhatGraph:
    levels: tuple[tuple[WeylElement, ...], ...]
    edges: tuple[tuple[WeylElement, WeylElement], ...]
    signs: dict = field(hash=False, compare=False)

    @property
    def column_sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def out_edges(self, w: WeylElement):
        return self._out.get(w, ())

    @cached_property
    def _out(self):
        out = {}
        for a, b in self.edges:
            out.setdefault(a, []).append(b)
        return out

    def squares(self):
        """Yield ``(w, (w1, w2), w2')`` for every length-2 Bruhat interval."""
        for w, mids in self._two_step().items():
            for top, ms in mids.items():
                yield w, tuple(ms), top

    def _two_step(self):
        res = {}
        for w in (x for level in self.levels for x in level):
            tops = {}
            for m in self.out_edges(w):
                for t in self.out_edges(m):
                    tops.setdefault(t, []).append(m)
            res[w] = tops
        return res


class RootSystem:
    """Root datum, Chevalley structure constants and Weyl group of a finite type.

    Structure constants use the extraspecial-pair convention with
    ``N[alpha, beta] = -(p + 1)`` on extraspecial pairs.  In A2 this gives
    ``f_{12} = [f_1, f_2]`` and ``e_{12} = [e_2, e_1]``.
    """

    def __init__(self, series: str, rank: int):
        self.series = series
        self.rank = rank
        self.gram = _gram_matrix(series, rank)
        self.cartan = np.array(
            [[2 * self.gram[i, j] // self.gram[i, i] for j in range(rank)] for i in range(rank)],
            dtype=np.int64,
        )
        self.simple_roots = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
        self.positive_roots = self._compute_positive_roots()
        self.root_index = {r: i for i, r in enumerate(self.positive_roots)}
        self.all_roots = set(self.positive_roots) | {_neg(r) for r in self.positive_roots}
        self.structure_constants = self._compute_structure_constants()

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __reduce__(self):
        return (build_root_system, (self.series, self.rank))

    # -- pairings -------------------------------------------------------
    def inner(self, a, b) -> int:
        return int(sum(a[i] * self.gram[i, j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j]))

    def coroot_pairing(self, mu, beta) -> Fraction:
        """<mu, beta^vee> = 2 (mu, beta) / (beta, beta)."""
        return Fraction(2 * self.inner(mu, beta), self.inner(beta, beta))

    def simple_pairings(self, mu) -> tuple[int, ...]:
        """<mu, alpha_i^vee> for every simple root (mu in the root lattice)."""
        return tuple(int(sum(self.cartan[i, j] * mu[j] for j in range(self.rank))) for i in range(self.rank))

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        total = [0] * self.rank
        for r in self.positive_roots:
            total = [a + b for a, b in zip(total, r)]
        return tuple(Fraction(t, 2) for t in total)

    @cached_property
    def two_rho(self) -> Weight:
        return tuple(int(2 * x) for x in self.rho)

    def height(self, mu) -> int:
        return sum(mu)

    def is_root(self, mu) -> bool:
        return tuple(mu) in self.all_roots

    def coroot_coefficients(self, beta) -> tuple[int, ...]:
        """Coefficients c_i with beta^vee = sum c_i alpha_i^vee (beta positive)."""
        bb = self.inner(beta, beta)
        return tuple(beta[i] * int(self.gram[i, i]) // bb for i in range(self.rank))

    def weyl_dimension(self, lam) -> int:
        """Dimension of the irreducible module with highest weight lam."""
        num = Fraction(1)
        for beta in self.positive_roots:
            num *= (self.coroot_pairing(lam, beta) + self.coroot_pairing(self.rho, beta)) / self.coroot_pairing(self.rho, beta)
        assert num.denominator == 1
        return int(num)

    def is_dominant(self, mu) -> bool:
        return all(p >= 0 for p in self.simple_pairings(mu))

    # -- roots ------------------------------------------------------------
    def _compute_positive_roots(self):
        roots = set(self.simple_roots)
        layer = list(self.simple_roots)
        while layer:
            nxt = []
            for beta in layer:
                pair = self.simple_pairings(beta)
                for i, alpha in enumerate(self.simple_roots):
                    if beta == alpha:
                        continue
                    p = 0
                    while _sub(beta, tuple((p + 1) * a for a in alpha)) in roots:
                        p += 1
                    q = p - pair[i]
                    cand = _add(beta, alpha)
                    if q > 0 and cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
            layer = nxt
        return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))

    def _compute_structure_constants(self):
        roots = self.all_roots
        order = self.root_index
        special = {}

        def string_p(r, s):
            p = 0
            while _sub(s, tuple((p + 1) * x for x in r)) in roots:
                p += 1
            return p

        def N(a, b):
            c = _add(a, b)
            if c not in roots:
                return 0
            pa, pb = _is_positive(a), _is_positive(b)
            if pa and pb:
                if order[a] > order[b]:
                    return -N(b, a)
                return special[(a, b)]
            if not pa and not pb:
                return -N(_neg(a), _neg(b))
            cp = _neg(c)
            # a + b + cp = 0: N_ab/(cp,cp) = N_{b,cp}/(a,a) = N_{cp,a}/(b,b)
            if _is_positive(b) == _is_positive(cp):
                val = Fraction(self.inner(cp, cp), self.inner(a, a)) * N(b, cp)
            else:
                val = Fraction(self.inner(cp, cp), self.inner(b, b)) * N(cp, a)
            assert val.denominator == 1
            return int(val)

        for xi in self.positive_roots:
            pairs = [
                (r, _sub(xi, r))
                for r in self.positive_roots
                if _sub(xi, r) in order and order[r] < order[_sub(xi, r)]
            ]
            if not pairs:
                continue
            r0, s0 = pairs[0]
            special[(r0, s0)] = -(string_p(r0, s0) + 1)
            n0 = special[(r0, s0)]
            xx = self.inner(xi, xi)
            for r, s in pairs[1:]:
                total = Fraction(0)
                q = _sub(s, r0)
                if q in roots:
                    total += Fraction(N(s, _neg(r0)) * N(r, _neg(s0)), self.inner(q, q))
                q = _sub(r, r0)
                if q in roots:
                    total += Fraction(N(_neg(r0), r) * N(s, _neg(s0)), self.inner(q, q))
                # N_{-r0,-s0} = -n0
                val = total * xx / n0
                assert val.denominator == 1
                special[(r, s)] = int(val)

        table = {}
        for a in roots:
            for b in roots:
                if _add(a, b) in roots:
                    table[(a, b)] = N(a, b)
        return table

    def N(self, a, b) -> int:
        return self.structure_constants.get((tuple(a), tuple(b)), 0)

    # -- Weyl group -------------------------------------------------------
    def _simple_reflection_matrix(self, i):
        m = np.eye(self.rank, dtype=np.int64)
        m[i, :] -= self.cartan[i, :]
        return m

    def reflection(self, beta):
        """Matrix of s_beta on root coordinates."""
        cols = []
        for a in self.simple_roots:
            c = self.coroot_pairing(a, beta)
            cols.append(_sub(a, tuple(int(c) * x for x in beta)))
        return np.array(cols, dtype=np.int64).T

    def _element(self, mat: np.ndarray, word) -> WeylElement:
        two_rho = np.array(self.two_rho)
        shift = (mat @ two_rho - two_rho) // 2
        return WeylElement(tuple(map(tuple, mat.tolist())), tuple(word), tuple(int(x) for x in shift))

    @cached_property
    def identity(self) -> WeylElement:
        return self._element(np.eye(self.rank, dtype=np.int64), ())

    @cached_property
    def weyl_group(self) -> tuple[WeylElement, ...]:
        """All elements, by length, each with a lexicographically first reduced word."""
        simple = [self._simple_reflection_matrix(i) for i in range(self.rank)]
        start = np.eye(self.rank, dtype=np.int64)
        seen = {self.identity.matrix: self.identity}
        out = [self.identity]
        queue = deque([(start, ())])
        while queue:
            mat, word = queue.popleft()
            for i in range(self.rank):
                new = simple[i] @ mat
                key = tuple(map(tuple, new.tolist()))
                if key not in seen:
                    el = self._element(new, (i,) + word)
                    seen[key] = el
                    out.append(el)
                    queue.append((new, el.word))
        out.sort(key=lambda w: (w.length, w.word))
        return tuple(out)

    @cached_property
    def longest_element(self) -> WeylElement:
        return self.weyl_group[-1]

    def element_from_word(self, word) -> WeylElement:
        mat = np.eye(self.rank, dtype=np.int64)
        for i in reversed(word):
            mat = self._simple_reflection_matrix(i) @ mat
        key = tuple(map(tuple, mat.tolist()))
        return self._by_matrix[key]

    @cached_property
    def _by_matrix(self):
        return {w.matrix: w for w in self.weyl_group}

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        mat = np.array(u.matrix) @ np.array(v.matrix)
        return self._by_matrix[tuple(map(tuple, mat.tolist()))]

    def inversion_count(self, w: WeylElement) -> int:
        return sum(1 for beta in self.positive_roots if not _is_positive(w.apply(beta)))

    def weyl_group_order(self) -> int:
        return len(self.weyl_group)


_CACHE: dict[tuple[str, int], RootSystem] = {}


def build_root_system(series: str, rank: int) -> RootSystem:
    """Return the (cached, immutable) root system of type ``series``+``rank``."""
    series = series.upper()
    key = (series, int(rank))
    if key not in _CACHE:
        _CACHE[key] = RootSystem(series, int(rank))
    return _CACHE[key]


def parse_type(label: str) -> RootSystem:
    """``"G2"`` -> the G2 root system."""
    label = label.strip()
    if len(label) < 2 or not label[1:].isdigit():
        raise RootSystemError(f"cannot parse Lie type {label!r}")
    return build_root_system(label[0], int(label[1:]))


def dot_action(w: WeylElement, mu: Weight) -> Weight:
    return w.dot(tuple(mu))


def is_dot_dominant(rs: RootSystem, mu: Weight) -> DotOrbitInfo:
    """Locate the dominant element of the dot-orbit of ``mu``.

    Reflects ``mu + rho`` into the dominant chamber by simple reflections; a
    vanishing pairing along the way means ``mu`` is dot-singular.
    """
    mu = tuple(mu)
    v = tuple(2 * m + r for m, r in zip(mu, rs.two_rho))  # 2(mu + rho)
    word: list[int] = []
    while True:
        pair = rs.simple_pairings(v)
        if any(p == 0 for p in pair):
            return DotOrbitInfo("singular")
        neg = [i for i, p in enumerate(pair) if p < 0]
        if not neg:
            break
        i = neg[0]
        v = _sub(v, tuple(pair[i] * a for a in rs.simple_roots[i]))
        word.insert(0, i)
    dominant = tuple((a - b) // 2 for a, b in zip(v, rs.two_rho))
    w = rs.element_from_word(word) if word else rs.identity
    if not word:
        return DotOrbitInfo("dominant", mu, w, 1)
    return DotOrbitInfo("neither", dominant, w, (-1) ** w.length)


def _solve_gf2(equations, nvars, rng=None):
    """Solve a GF(2) system given as (bitmask, rhs) pairs; free variables random if rng."""
    pivots = {}  # pivot bit -> (mask, rhs)
    for mask, rhs in equations:
        for bit, (pm, pr) in pivots.items():
            if mask >> bit & 1:
                mask ^= pm
                rhs ^= pr
        if mask == 0:
            if rhs:
                raise RuntimeError("BGG sign system is infeasible")
            continue
        bit = mask.bit_length() - 1
        for b2, (pm, pr) in list(pivots.items()):
            if pm >> bit & 1:
                pivots[b2] = (pm ^ mask, pr ^ rhs)
        pivots[bit] = (mask, rhs)
    values = [0] * nvars
    for v in range(nvars):
        if v not in pivots and rng is not None:
            values[v] = rng.randint(0, 1)
    for bit, (mask, rhs) in pivots.items():
        acc = rhs
        m = mask & ~(1 << bit)
        while m:
            b = m.bit_length() - 1
            acc ^= values[b]
            m &= ~(1 << b)
        values[bit] = acc
    return values


_BRUHAT: dict = {}


def build_bruhat_graph(rs: RootSystem, seed: int | None = None) -> BruhatGraph:
    """Bruhat graph of W with a BGG sign assignment.

    Edges join ``w`` to ``s_beta w`` whenever the length goes up by one.
    Signs make every length-2 square anticommute; ``seed`` picks a different
    (equally valid) solution for the free variables.
    """
    key = (rs.series, rs.rank, seed)
    if key in _BRUHAT:
        return _BRUHAT[key]
    W = rs.weyl_group
    by_len: dict[int, list[WeylElement]] = {}
    for w in W:
        by_len.setdefault(w.length, []).append(w)
    levels = tuple(tuple(by_len[k]) for k in sorted(by_len))
    refl = [rs.reflection(beta) for beta in rs.positive_roots]
    edges = []
    for w in W:
        m = np.array(w.matrix)
        targets = set()
        for r in refl:
            t = rs._by_matrix[tuple(map(tuple, (r @ m).tolist()))]
            if t.length == w.length + 1:
                targets.add(t)
        edges.extend((w, t) for t in sorted(targets, key=lambda x: x.word))
    edges = tuple(edges)
    index = {e: n for n, e in enumerate(edges)}
    graph = BruhatGraph(levels, edges, {})
    equations = []
    for w, mids, top in graph.squares():
        if len(mids) != 2:
            raise RuntimeError(f"Bruhat interval [{w}, {top}] has {len(mids)} atoms")
        mask = 0
        for m in mids:
            mask ^= 1 << index[(w, m)]
            mask ^= 1 << index[(m, top)]
        equations.append((mask, 1))
    rng = random.Random(seed) if seed is not None else None
    if rng is not None:
        rng.shuffle(equations)
    values = _solve_gf2(equations, len(edges), rng)
    graph.signs.update({e: (-1) ** values[index[e]] for e in edges})
    _BRUHAT[key] = graph
    return graph


class ChevalleyBasis:
    """Chevalley basis of the Lie algebra with a sparse bracket table.

    Basis order: ``e_beta`` for positive roots (root order), then ``h_1..h_r``,
    then ``f_beta = e_{-beta}`` (root order).
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        npos = len(rs.positive_roots)
        self.labels = (
            [("e", b) for b in rs.positive_roots]
            + [("h", i) for i in range(rs.rank)]
            + [("f", b) for b in rs.positive_roots]
        )
        self.dim = len(self.labels)
        self.index = {lab: n for n, lab in enumerate(self.labels)}
        self.npos = npos
        self.weights = []
        for kind, b in self.labels:
            if kind == "e":
                self.weights.append(b)
            elif kind == "f":
                self.weights.append(_neg(b))
            else:
                self.weights.append((0,) * rs.rank)
        self.table = [[self._bracket(a, b) for b in range(self.dim)] for a in range(self.dim)]

    def e(self, beta) -> int:
        return self.index[("e", tuple(beta))]

    def f(self, beta) -> int:
        return self.index[("f", tuple(beta))]

    def h(self, i) -> int:
        return self.index[("h", i)]

    def _root_of(self, a):
        kind, b = self.labels[a]
        if kind == "e":
            return b
        if kind == "f":
            return _neg(b)
        return None

    def _root_vector(self, alpha) -> int:
        return self.e(alpha) if _is_positive(alpha) else self.f(_neg(alpha))

    def _bracket(self, a, b) -> dict[int, int]:
        rs = self.rs
        ra, rb = self._root_of(a), self._root_of(b)
        if ra is None and rb is None:
            return {}
        if ra is None:
            c = rs.simple_pairings(rb)[self.labels[a][1]]
            return {b: c} if c else {}
        if rb is None:
            c = rs.simple_pairings(ra)[self.labels[b][1]]
            return {a: -c} if c else {}
        s = _add(ra, rb)
        if not any(s):
            pos = ra if _is_positive(ra) else rb
            sign = 1 if _is_positive(ra) else -1
            return {self.h(i): sign * c for i, c in enumerate(rs.coroot_coefficients(pos)) if c}
        if s in rs.all_roots:
            return {self._root_vector(s): rs.N(ra, rb)}
        return {}

    def bracket(self, x: dict, y: dict) -> dict:
        out: dict[int, int] = {}
        for a, ca in x.items():
            row = self.table[a]
            for b, cb in y.items():
                for c, v in row[b].items():
                    out[c] = out.get(c, 0) + ca * cb * v
        return {k: v for k, v in out.items() if v}


_CHEV: dict = {}


def chevalley_basis(rs: RootSystem) -> ChevalleyBasis:
    if rs.name not in _CHEV:
        _CHEV[rs.name] = ChevalleyBasis(rs)
    return _CHEV[rs.name]
