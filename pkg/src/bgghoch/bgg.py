"""BGG complexes of weight modules."""
from __future__ import annotations

from dataclasses import dataclass, field

from .enveloping import EdgeMaps, PBWElement, cached_edge_maps
from .parabolic import WeightedModule, _addto
from .rootsystem import WeylElement, build_bruhat_graph, is_dot_dominant


def act_pbw(E: WeightedModule, x: PBWElement, vectors: list[dict]) -> list[dict]:
    """Apply x to each vector; PBW monomials act right-to-left.

    Monomials sharing a tail of generators share the partial products.
    """
    nroots = len(E.rs.positive_roots)
    terms = list(x.terms.items())
    results = [dict() for _ in vectors]

    def apply(vecs, group, t):
        if t < 0:
            coef = sum(c for _, c in group)
            if coef:
                for res, v in zip(results, vecs):
                    for k, c in v.items():
                        _addto(res, k, coef * c)
            return
        by_power: dict[int, list] = {}
        for m, c in group:
            by_power.setdefault(m[t], []).append((m, c))
        cur = vecs
        top = max(by_power)
        for p in range(top + 1):
            if p:
                cur = [E.act_vector(t, v) for v in cur]
                if not any(cur):
                    return
            if p in by_power:
                apply(cur, by_power[p], t - 1)

    if terms:
        apply([dict(v) for v in vectors], terms, nroots - 1)
    return results


@dataclass
class BGGComplex:
    """BGG(E, lam): degree k holds E[w.lam] for l(w) = k.

    ``spaces[k]`` lists ``(w, basis)`` pairs in (reduced word) order and
    ``differentials[k]`` holds the columns of d^k : degree k -> degree k+1.
    """

    lam: tuple
    spaces: list
    differentials: list = field(default_factory=list)

    def dims(self) -> list[int]:
        return [sum(len(b) for _, b in level) for level in self.spaces]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.dims()))


def _degree_layout(E: WeightedModule, lam, graph):
    spaces = []
    for level in graph.levels:
        spaces.append([(w, E.basis(w.dot(lam))) for w in sorted(level, key=lambda w: w.word)])
    return spaces


def build_differential(E: WeightedModule, lam, k: int, spaces=None, maps: EdgeMaps | None = None, seed=None):
    """Columns of d^k as dicts ``{row: int}``."""
    rs = E.rs
    graph = build_bruhat_graph(rs, seed)
    spaces = spaces if spaces is not None else _degree_layout(E, lam, graph)
    maps = maps or cached_edge_maps(rs, tuple(lam))
    src = spaces[k]
    tgt = spaces[k + 1] if k + 1 < len(spaces) else []
    row_index: dict = {}
    offset = 0
    for w, basis in tgt:
        for n, key in enumerate(basis):
            row_index[(w, key)] = offset + n
        offset += len(basis)
    columns = []
    for w, basis in src:
        block = [dict() for _ in basis]
        if basis:
            for w2 in graph.out_edges(w):
                if w2.length != k + 1:
                    continue
                tb = E.basis(w2.dot(lam))
                if not tb:
                    continue
                sign = graph.signs[(w, w2)]
                images = act_pbw(E, maps[(w, w2)], [{key: 1} for key in basis])
                for col, img in zip(block, images):
                    for key, c in img.items():
                        _addto(col, row_index[(w2, key)], sign * c)
        columns.extend(block)
    return columns


def build_bgg_complex(E: WeightedModule, lam, seed=None, check: bool | None = None) -> BGGComplex:
    """Assemble BGG(E, lam) for dominant lam.  ``check`` verifies d^2 = 0."""
    rs = E.rs
    lam = tuple(lam)
    if is_dot_dominant(rs, lam).status != "dominant":
        raise ValueError(f"{lam} is not dominant")
    graph = build_bruhat_graph(rs, seed)
    spaces = _degree_layout(E, lam, graph)
    maps = cached_edge_maps(rs, lam)
    diffs = [build_differential(E, lam, k, spaces, maps, seed) for k in range(len(spaces) - 1)]
    cx = BGGComplex(lam, spaces, diffs)
    if check is None:
        check = rs.rank <= 2
    if check:
        for k in range(len(diffs) - 1):
            if compose(diffs[k + 1], diffs[k]):
                raise AssertionError(f"d^{k + 1} d^{k} != 0 for {E.label} at {lam}")
    return cx


def compose(a_cols, b_cols) -> bool:
    """True if the product A B of column-sparse matrices is nonzero."""
    for col in b_cols:
        out: dict = {}
        for r, c in col.items():
            for r2, c2 in a_cols[r].items():
                _addto(out, r2, c * c2)
        if out:
            return True
    return False


def dominant_spectrum(E: WeightedModule) -> list[tuple]:
    """Dominant representatives of the non-singular dot-orbits meeting E's weights."""
    seen = set()
    for mu in E.weights():
        info = is_dot_dominant(E.rs, mu)
        if info.status != "singular":
            seen.add(info.dominant)
    return sorted(seen)


def orbit_weights(E: WeightedModule, lam) -> list[tuple[WeylElement, tuple]]:
    """(w, w.lam) for the w whose weight space in E is nonzero."""
    return [(w, w.dot(lam)) for w in E.rs.weyl_group if w.dot(lam) in E.weight_multiplicities]
