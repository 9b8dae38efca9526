import pytest

from bgghoch.linalg import rank_exact
from bgghoch.parabolic import (
    TrivialModule,
    build_parabolic,
    build_vjk,
    commutator_action,
    dim_V_formula,
    feasible_triples,
    vector_weight_check,
)
from bgghoch.rootsystem import chevalley_basis, parse_type


def _cases(label, blocks, js, ks):
    rs = parse_type(label)
    for J in blocks:
        pd = build_parabolic(rs, J)
        for j in js:
            for k in ks:
                yield pd, j, k


def test_parabolic_data_a2():
    rs = parse_type("A2")
    pd = build_parabolic(rs, (1,))
    assert pd.d == 2 and pd.dim_GP == 2
    assert build_parabolic(rs, ()).d == 3
    assert build_parabolic(rs, (1, 2)).d == 0


def test_odd_k_rejected():
    pd = build_parabolic(parse_type("A2"), (1,))
    with pytest.raises(ValueError, match="odd"):
        build_vjk(pd, 1, 1)


@pytest.mark.parametrize("J", [(), (1,), (2,)])
def test_dim_V_formula_a2(J):
    for pd, j, k in _cases("A2", [J], range(0, 7), range(-8, 9, 2)):
        V = build_vjk(pd, j, k).V
        assert V.dim == dim_V_formula(pd.d, j, k)
        assert (V.dim > 0) == bool(feasible_triples(pd.d, j, k))


@pytest.mark.parametrize("label,J", [("A2", (1,)), ("A2", ()), ("B2", (1,)), ("G2", (2,))])
def test_presentation_dimensions(label, J):
    """dim M - dim T = dim V, and varpi Delta = 0 on every weight space."""
    for pd, j, k in _cases(label, [J], range(0, 3), range(-4, 5, 2)):
        fam = build_vjk(pd, j, k)
        assert fam.M.dim - fam.T.dim == fam.V.dim
        for w in fam.M.weights():
            D = fam.delta_matrix(w)
            P = fam.varpi_matrix(w)
            # columns of D are M-vectors; apply P
            for col in D:
                img = {}
                for m, c in col.items():
                    for v, x in P[m].items():
                        img[v] = img.get(v, 0) + c * x
                assert not any(img.values())
            assert rank_exact(P) == len(fam.V.basis(w)) if P else not fam.V.basis(w)


def _check_relations(E):
    rs = E.rs
    idx = rs.root_index
    for w in E.weights():
        for key in E.basis(w):
            vector_weight_check(E, key)
            for a, ra in enumerate(rs.positive_roots):
                for b, rb in enumerate(rs.positive_roots):
                    if b <= a:
                        continue
                    lhs = {k: v for k, v in commutator_action(E, a, b, key).items() if v}
                    s = tuple(x + y for x, y in zip(ra, rb))
                    if s in idx:
                        rhs = {k: -rs.N(ra, rb) * v for k, v in E.act(idx[s], key).items() if v}
                    else:
                        rhs = {}
                    assert lhs == rhs, (E, key, ra, rb)


@pytest.mark.parametrize("label,J,j,k", [
    ("A2", (1,), 2, -2), ("A2", (), 2, 0), ("A2", (2,), 3, 2), ("B2", (1,), 2, 0), ("G2", (1,), 1, 0),
])
def test_modules_satisfy_nilradical_relations(label, J, j, k):
    fam = build_vjk(build_parabolic(parse_type(label), J), j, k)
    for E in (fam.V, fam.M, fam.T):
        _check_relations(E)


@pytest.mark.parametrize("label,J,j,k", [("A2", (1,), 2, -2), ("A2", (), 2, 0), ("B2", (2,), 2, 2)])
def test_varpi_and_delta_are_equivariant(label, J, j, k):
    fam = build_vjk(build_parabolic(parse_type(label), J), j, k)
    V, M, pre = fam.V, fam.M, fam.pre_T
    npos = len(V.rs.positive_roots)
    for w in M.weights():
        for key in M.basis(w):
            for b in range(npos):
                assert V.varpi_vector(M.act(b, key)) == V.act_vector(b, V.varpi_key(key))
    for w in pre.weights():
        for key in pre.basis(w):
            for b in range(npos):
                lhs = {k: v for k, v in pre.delta_vector(pre.act(b, key)).items() if v}
                rhs = {k: v for k, v in M.act_vector(b, pre.delta(key)).items() if v}
                assert lhs == rhs


def test_worked_example_action():
    """f_1 acting on e_2^2 (x) e_1 (x) f_1^f_2 in V_{3,0} for the Borel of sl3."""
    rs = parse_type("A2")
    cb = chevalley_basis(rs)
    V = build_vjk(build_parabolic(rs, ()), 3, 0).V
    key = ((0, 2, 0), (cb.e((1, 0)),), (0, 1))
    assert key in V.basis(V.weight_of(key))
    out = V.act_simple(0, key)
    # with e_12 = [e_1, e_2] this is e_2^2 e_12 (x) f_1^f_2^f_12 - e_2^2 (x) e_1 (x) f_1^f_12
    # up to the sign of e_12
    assert out == {((0, 2, 1), (), (0, 1, 2)): -1, ((0, 2, 0), (0,), (0, 2)): 1}


def test_trivial_module():
    E = TrivialModule(parse_type("G2"))
    assert E.dim == 1 and E.weights() == [(0, 0)]
