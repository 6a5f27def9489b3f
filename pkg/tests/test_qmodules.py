import json
from collections import Counter

import pytest

from slkcat import qmodules as qm, tableaux as tb
from slkcat.scalars import LaurentInt, q
from slkcat.weights import phi


def ss_character(lam, k):
    # independent oracle: weights of semistandard tableaux
    return dict(sorted(Counter(phi(tb.reading_word(T), k) for T in tb.enumerate_semistandard(lam, k)).items()))


def test_vector_rep_shape():
    V = qm.vector_rep(3)
    assert V.labels == [(1,), (2,), (3,)]
    assert V.act("F", 1, {0: LaurentInt(1)}) == {1: 1}
    assert V.act("E", 2, {2: LaurentInt(1)}) == {1: 1}
    assert V.act("F", 2, {0: LaurentInt(1)}) == {}


@pytest.mark.parametrize("k", [2, 3, 4])
def test_relations_vector_and_tensors(k):
    V = qm.vector_rep(k)
    assert qm.relations_hold(V)
    assert qm.relations_hold(qm.tensor(V, V))
    assert qm.relations_hold(qm.specialize_q1(qm.tensor(V, V)), classical=True)


def test_relations_triple_tensor():
    assert qm.relations_hold(qm.tensor_power(qm.vector_rep(3), 3))


def test_tensor_coproduct_on_two_factors():
    V2 = qm.tensor(qm.vector_rep(2), qm.vector_rep(2))
    one = LaurentInt(1)
    # F(v1 (x) v1) = v2 (x) v1 + q^{-1} v1 (x) v2
    got = V2.act("F", 1, {V2.index[(1, 1)]: one})
    assert got == {V2.index[(2, 1)]: 1, V2.index[(1, 2)]: q ** -1}
    # E(v2 (x) v2) = v1 (x) K v2 + v2 (x) v1
    got = V2.act("E", 1, {V2.index[(2, 2)]: one})
    assert got == {V2.index[(1, 2)]: q ** -1, V2.index[(2, 1)]: 1}


def test_wedge_expand_small():
    assert qm.wedge_expand((2, 1)) == {(2, 1): 1, (1, 2): -q}
    with pytest.raises(ValueError):
        qm.wedge_expand((1, 2))


@pytest.mark.parametrize("k,r", [(k, r) for k in range(2, 6) for r in range(1, min(3, k - 1) + 1)])
def test_wedge_closure(k, r):
    assert qm.wedge_closure_check(k, r) == []


def test_wedge_rep_relations_and_dimension():
    for k in range(2, 5):
        for r in range(1, k):
            W = qm.wedge_rep(k, r)
            assert qm.relations_hold(W)
            assert W.dim == len(list(tb.enumerate_semistandard((r,), k)))


def test_wedge_rep_bounds():
    with pytest.raises(ValueError):
        qm.wedge_rep(3, 3)


def test_tilde_character_is_product():
    M = qm.build_tilde_V((1, 1), 3)
    a = Counter(qm.vector_rep(3).weights)
    b = Counter(qm.wedge_rep(3, 2).weights)
    prod = Counter()
    for x, m in a.items():
        for y, n in b.items():
            prod[tuple(s + t for s, t in zip(x, y))] += m * n
    assert qm.character(M) == dict(sorted(prod.items()))


def test_tilde_validation():
    with pytest.raises(ValueError):
        qm.build_tilde_V((1,), 3)


@pytest.mark.parametrize("lam,k", [((1,), 2), ((1, 1), 2), ((2, 1), 3), ((1, 1, 1), 3), ((2, 2), 3),
                                   ((2, 1, 1), 3), ((3, 1), 4), ((2, 1), 4)])
def test_closure_is_irreducible_with_schur_character(lam, k):
    c = tb.slk_weight_from_partition(lam, k)
    M = qm.build_tilde_V(c, k)
    sing = qm.singular_vectors(M, qm.top_weight(c, k))
    assert len(sing) == 1
    C = qm.submodule_closure(M, sing, ops=("F",))
    assert C.dim == len(tb.enumerate_semistandard(lam, k))
    assert C.character() == ss_character(lam, k)


def test_closure_is_E_stable_and_induced_action_is_a_rep():
    c, k = (1, 1), 3
    M = qm.build_tilde_V(c, k)
    sing = qm.singular_vectors(M, qm.top_weight(c, k))
    F_only = qm.submodule_closure(M, sing, ops=("F",))
    both = qm.submodule_closure(M, sing)
    assert F_only.dim == both.dim == 8
    assert qm.relations_hold(both.induced())


def test_singular_vectors_of_v_tensor_v():
    # weight (1,1) of V (x) V for sl_2: the singular line is the expanded wedge v2 ^ v1
    V2 = qm.tensor(qm.vector_rep(2), qm.vector_rep(2))
    (s,) = qm.singular_vectors(V2, (1, 1))
    assert V2.act("E", 1, s) == {}
    wedge = {V2.index[t]: c for t, c in qm.wedge_expand((2, 1)).items()}
    assert s == {i: -c for i, c in wedge.items()}


def test_module_json():
    W = qm.wedge_rep(3, 2)
    blob = json.loads(json.dumps(W.to_json()))
    assert blob["basis"][0] == [[2, 1]]
    assert set(blob["E"]) == {"1", "2"}
