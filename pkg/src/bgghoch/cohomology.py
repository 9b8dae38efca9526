"""Cohomology of BGG complexes by exact rank computation."""
from __future__ import annotations

from dataclasses import dataclass, field

from .bgg import _degree_layout, act_pbw, build_differential
from .enveloping import cached_edge_maps
from .linalg import rank_exact
from .parabolic import VjkFamily, WeightedModule, _addto
from .rootsystem import build_bruhat_graph, is_dot_dominant


@dataclass
class CohomologyRecord:
    """dims[i] is the multiplicity of L(lam) in H^i; None marks an uncomputed degree."""

    label: str
    lam: tuple
    dims: list
    method: str = "direct"
    space_dims: list = field(default_factory=list)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def to_json(self) -> dict:
        return {"label": self.label, "lambda": list(self.lam), "dims": list(self.dims), "method": self.method, "space_dims": list(self.space_dims)}

    @classmethod
    def from_json(cls, data) -> "CohomologyRecord":
        return cls(data["label"], tuple(data["lambda"]), list(data["dims"]), data["method"], list(data["space_dims"]))


def _needed_ranks(space_dims, degrees):
    need = set()
    top = len(space_dims) - 1
    for i in degrees:
        if not space_dims[i]:
            continue
        if i < top and space_dims[i + 1]:
            need.add(i)
        if i > 0 and space_dims[i - 1]:
            need.add(i - 1)
    return need


def _dims_from_ranks(space_dims, ranks, degrees):
    dims = [None] * len(space_dims)
    for i in degrees:
        r_out = ranks.get(i, 0)
        r_in = ranks.get(i - 1, 0)
        dims[i] = space_dims[i] - r_out - r_in
    return dims


def bgg_cohomology(E: WeightedModule, lam, degrees=None, seed=None) -> CohomologyRecord:
    """dim H^i(BGG(E, lam)) = dim ker d^i - rank d^{i-1}."""
    rs = E.rs
    lam = tuple(lam)
    if is_dot_dominant(rs, lam).status != "dominant":
        raise ValueError(f"{lam} is not dominant")
    graph = build_bruhat_graph(rs, seed)
    spaces = _degree_layout(E, lam, graph)
    space_dims = [sum(len(b) for _, b in level) for level in spaces]
    degrees = range(len(spaces)) if degrees is None else sorted(set(degrees))
    ranks = {}
    if any(space_dims):
        maps = cached_edge_maps(rs, lam)
        for k in sorted(_needed_ranks(space_dims, degrees)):
            ranks[k] = rank_exact(build_differential(E, lam, k, spaces, maps, seed))
    return CohomologyRecord(E.label, lam, _dims_from_ranks(space_dims, ranks, degrees), "direct", space_dims)


def _varpi_transpose(fam: VjkFamily, weight):
    """Columns of varpi^T on V[weight]: V key -> M vector."""
    out: dict = {v: {} for v in fam.V.basis(weight)}
    for m in fam.M.basis(weight):
        for v, c in fam.V.varpi_key(m).items():
            out[v][m] = c
    return out


def bgg_cohomology_via_varpi(fam: VjkFamily, lam, degrees=None, seed=None) -> CohomologyRecord:
    """Cohomology of V from d~ = varpi d_M varpi^T, never forming d_V.

    varpi varpi^T is invertible on each weight space, so d~ has the same
    ranks as d_V even though d~ need not square to zero.
    """
    V, M = fam.V, fam.M
    rs = V.rs
    lam = tuple(lam)
    if is_dot_dominant(rs, lam).status != "dominant":
        raise ValueError(f"{lam} is not dominant")
    graph = build_bruhat_graph(rs, seed)
    spaces = _degree_layout(V, lam, graph)
    space_dims = [sum(len(b) for _, b in level) for level in spaces]
    degrees = range(len(spaces)) if degrees is None else sorted(set(degrees))
    maps = cached_edge_maps(rs, lam)
    ranks = {}
    for k in sorted(_needed_ranks(space_dims, degrees)):
        row_index = {}
        off = 0
        for w, basis in spaces[k + 1]:
            for n, key in enumerate(basis):
                row_index[(w, key)] = off + n
            off += len(basis)
        columns = []
        for w, basis in spaces[k]:
            if not basis:
                continue
            vt = _varpi_transpose(fam, w.dot(lam))
            block = [dict() for _ in basis]
            for w2 in graph.out_edges(w):
                if not V.basis(w2.dot(lam)):
                    continue
                sign = graph.signs[(w, w2)]
                images = act_pbw(M, maps[(w, w2)], [vt[key] for key in basis])
                for col, img in zip(block, images):
                    for key, c in V.varpi_vector(img).items():
                        _addto(col, row_index[(w2, key)], sign * c)
            columns.extend(block)
        ranks[k] = rank_exact(columns)
    return CohomologyRecord(V.label, lam, _dims_from_ranks(space_dims, ranks, degrees), "varpi", space_dims)
