"""PBW arithmetic in U(n), singular vectors and right division.

``n`` is spanned by the negative root vectors ``f_beta``.  A PBW monomial is
an exponent tuple over the positive roots in the fixed root order, read as
``f_{b1}^{k1} ... f_{bN}^{kN}``.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .rootsystem import RootSystem, WeylElement, build_bruhat_graph

Monomial = tuple[int, ...]

# straightening recursion depth grows with the degree of the monomials
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class NotDivisibleError(ArithmeticError):
    pass


class Straightener:
    """Memoized normal ordering for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        roots = rs.positive_roots
        self.nroots = len(roots)
        self.simple_index = [rs.root_index[a] for a in rs.simple_roots]
        # [f_a, f_b] = N_{-a,-b} f_{a+b}
        self.comm: dict[tuple[int, int], tuple[int, int]] = {}
        for a, ra in enumerate(roots):
            for b, rb in enumerate(roots):
                s = tuple(x + y for x, y in zip(ra, rb))
                if s in rs.root_index:
                    na = tuple(-x for x in ra)
                    nb = tuple(-x for x in rb)
                    self.comm[(a, b)] = (rs.root_index[s], rs.N(na, nb))
        self._memo: dict[tuple[Monomial, int], dict[Monomial, int]] = {}

    def times_generator(self, m: Monomial, b: int) -> dict[Monomial, int]:
        """Normal form of ``m * f_b`` (integer coefficients)."""
        key = (m, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        last = -1
        for t in range(self.nroots - 1, -1, -1):
            if m[t]:
                last = t
                break
        if b >= last:
            mm = list(m)
            mm[b] += 1
            res = {tuple(mm): 1}
        else:
            mm = list(m)
            mm[last] -= 1
            m0 = tuple(mm)
            res: dict[Monomial, int] = {}
            # m0 f_last f_b = m0 f_b f_last + m0 [f_last, f_b]
            for mono, c in self.times_generator(m0, b).items():
                for mono2, c2 in self.times_generator(mono, last).items():
                    res[mono2] = res.get(mono2, 0) + c * c2
            hit = self.comm.get((last, b))
            if hit is not None:
                s, n = hit
                for mono, c in self.times_generator(m0, s).items():
                    res[mono] = res.get(mono, 0) + n * c
            res = {k: v for k, v in res.items() if v}
        self._memo[key] = res
        return res

    def times_power(self, terms: dict, b: int, n: int) -> dict:
        for _ in range(n):
            out: dict = {}
            for m, c in terms.items():
                for m2, c2 in self.times_generator(m, b).items():
                    out[m2] = out.get(m2, 0) + c * c2
            terms = {k: v for k, v in out.items() if v}
        return terms


_STRAIGHTENERS: dict[str, Straightener] = {}


def straightener(rs: RootSystem) -> Straightener:
    if rs.name not in _STRAIGHTENERS:
        _STRAIGHTENERS[rs.name] = Straightener(rs)
    return _STRAIGHTENERS[rs.name]


def _weight_of(rs: RootSystem, m: Monomial):
    w = [0] * rs.rank
    for k, beta in zip(m, rs.positive_roots):
        if k:
            for i in range(rs.rank):
                w[i] -= k * beta[i]
    return tuple(w)


def monomial_order_key(m: Monomial):
    """Fixed monomial order: total degree, then exponents lexicographically."""
    return (sum(m), m)


class PBWElement:
    """Immutable element of U(n) in PBW normal form."""

    __slots__ = ("rs", "terms", "_hash")

    def __init__(self, rs: RootSystem, terms: dict | None = None):
        self.rs = rs
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, rs):
        return cls(rs, {(0,) * len(rs.positive_roots): 1})

    @classmethod
    def generator(cls, rs, beta, power: int = 1):
        m = [0] * len(rs.positive_roots)
        m[rs.root_index[tuple(beta)]] = power
        return cls(rs, {tuple(m): 1})

    @classmethod
    def simple(cls, rs, i: int, power: int = 1):
        """``f_i**power`` for the 0-based simple index ``i``."""
        return cls.generator(rs, rs.simple_roots[i], power)

    @property
    def weight(self):
        """Common weight, or the string ``"inhomogeneous"`` (None for zero)."""
        weights = {_weight_of(self.rs, m) for m in self.terms}
        if not weights:
            return None
        if len(weights) > 1:
            return "inhomogeneous"
        return weights.pop()

    def is_zero(self) -> bool:
        return not self.terms

    def leading(self):
        m = max(self.terms, key=monomial_order_key)
        return m, self.terms[m]

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return PBWElement(self.rs, out)

    def __neg__(self):
        return PBWElement(self.rs, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return PBWElement(self.rs, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return pbw_multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, PBWElement) and self.rs is other.rs and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = [_root_name(b) for b in self.rs.positive_roots]
        parts = []
        for m in sorted(self.terms, key=monomial_order_key, reverse=True):
            c = self.terms[m]
            fac = "*".join(f"f{names[t]}" + (f"^{k}" if k > 1 else "") for t, k in enumerate(m) if k)
            parts.append(f"{c}" + (f"*{fac}" if fac else ""))
        return " + ".join(parts)


def _root_name(beta) -> str:
    digits = []
    for i, c in enumerate(beta):
        digits += [str(i + 1)] * c
    return "".join(digits) if max(beta) < 2 or len(beta) < 10 else "(" + ",".join(map(str, beta)) + ")"


def _generator_sequence(m: Monomial) -> list[int]:
    seq = []
    for t, k in enumerate(m):
        seq += [t] * k
    return seq


def pbw_multiply(a: PBWElement, b: PBWElement) -> PBWElement:
    st = straightener(a.rs)
    out: dict = {}
    for mb, cb in b.terms.items():
        cur = dict(a.terms)
        for t, k in enumerate(mb):
            if k:
                cur = st.times_power(cur, t, k)
        for m, c in cur.items():
            out[m] = out.get(m, 0) + c * cb
    return PBWElement(a.rs, out)


def power_product(rs: RootSystem, factors) -> PBWElement:
    """Normal form of ``f_{i1}^{n1} ... f_{ik}^{nk}`` for (0-based simple index, n) factors."""
    st = straightener(rs)
    terms = {(0,) * len(rs.positive_roots): 1}
    for i, n in factors:
        terms = st.times_power(terms, st.simple_index[i], n)
    return PBWElement(rs, terms)


# -- singular vectors ---------------------------------------------------------

def singular_word(rs: RootSystem, lam, w: WeylElement) -> tuple[tuple[int, int], ...]:
    """Factors (i, n) with c(w) proportional to the product of f_i^n, left to right.

    Built along the reduced word by ``c(s_i u) = f_i^n c(u)`` with
    ``n = <u(lam + rho), alpha_i^vee>``.
    """
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    v = tuple(2 * x + r for x, r in zip(lam, rs.two_rho))  # 2(lam + rho)
    factors = []
    for i in reversed(w.word):
        p = rs.simple_pairings(v)[i]
        assert p > 0 and p % 2 == 0
        factors.append((i, p // 2))
        v = tuple(x - p * a for x, a in zip(v, rs.simple_roots[i]))
    return tuple(reversed(factors))


def singular_vector(rs: RootSystem, lam, w: WeylElement, normalize: bool = True) -> PBWElement:
    """The singular vector c(w) of weight ``w.lam - lam`` in the Verma module M(lam)."""
    x = power_product(rs, singular_word(rs, lam, w))
    if normalize:
        _, c = x.leading()
        x = x.scale(Fraction(1, c)) if c != 1 else x
    return x


def divide_by_generator_power(p: PBWElement, b: int, n: int) -> PBWElement:
    """Solve ``x * f_b**n = p``.

    ``m * f_b**n`` equals ``m + n e_b`` plus terms of lower degree, so the
    quotient is found by peeling off top-degree terms.
    """
    rs = p.rs
    st = straightener(rs)
    rem = dict(p.terms)
    quot: dict = {}
    while rem:
        top = max(sum(m) for m in rem)
        m = max((m for m in rem if sum(m) == top))
        c = rem[m]
        if m[b] < n:
            raise NotDivisibleError("not right-divisible")
        q = list(m)
        q[b] -= n
        q = tuple(q)
        quot[q] = quot.get(q, 0) + c
        for m2, c2 in st.times_power({q: 1}, b, n).items():
            v = rem.get(m2, 0) - c * c2
            if v:
                rem[m2] = v
            else:
                rem.pop(m2, None)
    return PBWElement(rs, quot)


def kostant_monomials(rs: RootSystem, weight) -> list[Monomial]:
    """All PBW monomials of weight ``weight`` (a non-positive root-lattice vector)."""
    target = tuple(-x for x in weight)
    roots = rs.positive_roots
    out: list[Monomial] = []

    def rec(t, rem, acc):
        if t < 0:
            if not any(rem):
                out.append(tuple(acc))
            return
        beta = roots[t]
        kmax = min((rem[i] // beta[i] for i in range(rs.rank) if beta[i]), default=0)
        for k in range(kmax, -1, -1):
            acc[t] = k
            rec(t - 1, tuple(r - k * x for r, x in zip(rem, beta)), acc)
        acc[t] = 0

    if any(x < 0 for x in target):
        return []
    rec(len(roots) - 1, target, [0] * len(roots))
    return sorted(out, key=monomial_order_key)


def divide_right(p: PBWElement, q: PBWElement) -> PBWElement:
    """Solve ``x * q = p`` exactly.

    A pure generator power uses triangular peeling; anything else solves the
    linear system on the weight space of ``x``.
    """
    rs = p.rs
    if q.is_zero():
        raise ZeroDivisionError("division by zero PBW element")
    if p.is_zero():
        return PBWElement(rs, {})
    if len(q.terms) == 1:
        (m, c), = q.terms.items()
        support = [t for t, k in enumerate(m) if k]
        if len(support) <= 1:
            res = p if not support else divide_by_generator_power(p, support[0], m[support[0]])
            return res.scale(Fraction(1, c)) if c != 1 else res
    wp, wq = p.weight, q.weight
    if wp in (None, "inhomogeneous") or wq in (None, "inhomogeneous"):
        raise ValueError("divide_right needs homogeneous arguments")
    target = tuple(a - b for a, b in zip(wp, wq))
    basis = kostant_monomials(rs, target)
    images = [pbw_multiply(PBWElement(rs, {m: 1}), q).terms for m in basis]
    from .linalg import solve_exact

    rows = sorted({m for im in images for m in im} | set(p.terms), key=monomial_order_key)
    ridx = {m: n for n, m in enumerate(rows)}
    cols = [{ridx[m]: v for m, v in im.items()} for im in images]
    rhs = {ridx[m]: v for m, v in p.terms.items()}
    sol = solve_exact(cols, rhs, len(rows))
    if sol is None:
        raise NotDivisibleError("not right-divisible")
    return PBWElement(rs, {basis[n]: v for n, v in sol.items()})


def divide_by_word(p: PBWElement, factors) -> PBWElement:
    """Solve ``x * f_{i1}^{n1} ... f_{ik}^{nk} = p`` by peeling from the right."""
    st = straightener(p.rs)
    for i, n in reversed(tuple(factors)):
        p = divide_by_generator_power(p, st.simple_index[i], n)
    return p


class EdgeMaps:
    """Lazily computed BGG edge maps f_{w -> w'} for a dominant weight.

    With ``normalize=False`` the maps are the integral quotients of the
    unnormalized products of simple powers; these still compose consistently
    and are what the BGG differentials use.
    """

    def __init__(self, rs: RootSystem, lam, normalize: bool = True):
        if not rs.is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        self.rs = rs
        self.lam = tuple(lam)
        self.normalize = normalize
        self._c: dict = {}
        self._edge: dict = {}

    def c(self, w: WeylElement) -> PBWElement:
        if w not in self._c:
            self._c[w] = power_product(self.rs, singular_word(self.rs, self.lam, w))
        return self._c[w]

    def __getitem__(self, edge) -> PBWElement:
        if edge not in self._edge:
            w, w2 = edge
            x = divide_by_word(self.c(w2), singular_word(self.rs, self.lam, w))
            if self.normalize:
                ka = self.c(w).leading()[1]
                kb = self.c(w2).leading()[1]
                x = x.scale(Fraction(ka, kb))
            self._edge[edge] = x
        return self._edge[edge]

    def items(self):
        for e in build_bruhat_graph(self.rs).edges:
            yield e, self[e]


def edge_maps(rs: RootSystem, lam, normalize: bool = True) -> dict:
    """All edge maps ``{(w, w'): f_{w->w'}}`` with ``f * c(w) = c(w')``."""
    em = EdgeMaps(rs, lam, normalize)
    return dict(em.items())


@lru_cache(maxsize=256)
def cached_edge_maps(rs: RootSystem, lam) -> EdgeMaps:
    return EdgeMaps(rs, lam, normalize=False)


# -- Verma-module raising operators (used to certify singular vectors) -------

def raising_action(rs: RootSystem, mu, x: PBWElement, i: int) -> PBWElement:
    """``e_i x v_mu`` in the Verma module M(mu), as an element of U(n) v_mu."""
    from .rootsystem import chevalley_basis

    cb = chevalley_basis(rs)
    st = straightener(rs)
    roots = rs.positive_roots
    alpha = rs.simple_roots[i]
    out: dict = {}
    for m, c in x.terms.items():
        seq = _generator_sequence(m)
        for pos, t in enumerate(seq):
            beta = roots[t]
            tail = seq[pos + 1:]
            if beta == alpha:
                wt = list(mu)
                for u in tail:
                    wt = [a - b for a, b in zip(wt, roots[u])]
                scal = rs.simple_pairings(tuple(wt))[i]
                if not scal:
                    continue
                mid: list[tuple[int, int]] = []
                coef = scal
            else:
                diff = tuple(b - a for a, b in zip(alpha, beta))
                if diff not in rs.root_index:
                    continue
                br = cb.table[cb.e(alpha)][cb.f(beta)]
                (idx, coef), = br.items()
                mid = [rs.root_index[diff]]
            terms = {(0,) * len(roots): coef * c}
            for u in seq[:pos] + mid + tail:
                terms = st.times_power(terms, u, 1)
            for mm, cc in terms.items():
                out[mm] = out.get(mm, 0) + cc
    return PBWElement(rs, out)


def singular_space(rs: RootSystem, mu, weight) -> list[PBWElement]:
    """Basis of the vectors of U(n)_weight v_mu killed by every e_i (brute force)."""
    from .linalg import nullspace_exact

    basis = kostant_monomials(rs, weight)
    images = []
    for m in basis:
        x = PBWElement(rs, {m: 1})
        col = {}
        for i in range(rs.rank):
            for mm, c in raising_action(rs, mu, x, i).terms.items():
                col[(i, mm)] = c
        images.append(col)
    keys = sorted({k for col in images for k in col})
    kidx = {k: n for n, k in enumerate(keys)}
    cols = [{kidx[k]: v for k, v in col.items()} for col in images]
    return [PBWElement(rs, {basis[n]: v for n, v in vec.items()}) for vec in nullspace_exact(cols, len(keys))]


def all_monomials(rs: RootSystem, max_degree: int):
    """Every PBW monomial of total degree <= max_degree (small cases only)."""
    n = len(rs.positive_roots)
    for m in product(range(max_degree + 1), repeat=n):
        if sum(m) <= max_degree:
            yield m
