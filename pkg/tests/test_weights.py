from itertools import product

import pytest
from hypothesis import given, strategies as st

from slkcat import weights as wt


def reachable_below(mu, k, steps):
    """Weights mu - (sums of at most `steps` simple roots)."""
    seen = {tuple(mu)}
    frontier = [tuple(mu)]
    for _ in range(steps):
        nxt = []
        for m in frontier:
            for i in range(1, k):
                n = wt.wsub(m, wt.alpha(i, k))
                if n not in seen:
                    seen.add(n)
                    nxt.append(n)
        frontier = nxt
    return seen


def test_phi_example():
    assert wt.phi((1, 3, 1), 3) == (2, 0, 1)
    with pytest.raises(ValueError):
        wt.phi((4,), 3)


def test_rho_and_dominance():
    assert wt.rho(3) == (0, -1, -2)
    assert wt.is_dominant((3, 1, 0)) and not wt.is_dominant((2, 2))
    assert wt.dominant_rep((1, 3, 2)) == (3, 2, 1)


@given(st.lists(st.integers(1, 4), max_size=6))
def test_phi_is_orbit_invariant(a):
    assert wt.phi(a, 4) == wt.phi(sorted(a), 4)
    assert sum(wt.phi(a, 4)) == len(a)


def test_plus_minus_examples():
    assert wt.plus_i((2, 1), 1) == (2, 2)
    assert wt.plus_i((2, 2), 1) is wt.Absent
    assert not wt.plus_i((2, 2), 1)
    assert wt.minus_i((2, 2), 1) == (2, 1)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_plus_steps_phi_by_minus_alpha(k):
    for n in range(5):
        for a in product(range(1, k + 1), repeat=n):
            d = wt.dominant_rep(a)
            for i in range(1, k):
                p = wt.plus_i(d, i)
                if p:
                    assert wt.phi(p, k) == wt.wsub(wt.phi(d, k), wt.alpha(i, k))
                    assert wt.count_c(p, i + 1) == wt.count_c(d, i + 1) + 1


def test_pairing_with_fundamental_weights():
    k = 4
    for i in range(1, k):
        for j in range(1, k):
            assert wt.pairing(wt.varpi(i, k), j) == int(i == j)
            assert wt.pairing(wt.alpha(i, k), j) == wt.cartan(j, i)


@pytest.mark.parametrize("k", [2, 3])
def test_slk_geq_matches_root_reachability(k):
    mus = list(product(range(3), repeat=k))
    for mu in mus:
        below = reachable_below(mu, k, 6)
        for nu in mus:
            if sum(nu) != sum(mu):
                continue
            assert wt.slk_geq(mu, nu) == (nu in below)


def test_slk_comparisons_ignore_trace():
    assert wt.slk_equal((2, 1, 1), (1, 0, 0))
    assert wt.slk_geq((4, 2, 2), (2, 2, 1)) and wt.slk_geq((3, 1, 1), (2, 2, 1))
    # varpi_1 is not in the root lattice, so it is incomparable with 0
    assert not wt.slk_geq((1, 0, 0), (1, 1, 1)) and not wt.slk_geq((1, 1, 1), (1, 0, 0))


def test_dominance_order_on_tuples():
    assert wt.dominance_leq((1, 2), (2, 1))
    assert not wt.dominance_leq((2, 1), (1, 2))
    assert not wt.dominance_leq((1, 1), (2, 1))


def test_xi_poset_example():
    P = wt.xi_classes((2, 1), (1, 1))
    assert P.to_json() == {"classes": [[2, 1], [1, 2]], "leq_pairs": [[0, 0], [1, 0], [1, 1]]}
    assert P.project((1, 2)).representative == (1, 2)


def test_xi_poset_one_block_is_a_point():
    P = wt.xi_classes((3, 2, 1), (3,))
    assert len(P) == 1


def test_xi_poset_is_a_partial_order():
    P = wt.xi_classes((3, 2, 2, 1), (2, 2))
    pairs = {tuple(p) for p in P.leq_pairs()}
    n = len(P)
    assert all((i, i) in pairs for i in range(n))
    assert not any((i, j) in pairs and (j, i) in pairs for i in range(n) for j in range(n) if i != j)
    assert all((i, l) in pairs for (i, j) in pairs for (j2, l) in pairs if j == j2)


def test_inverse_dominance_single_block_is_slk_equality():
    assert wt.inverse_dominance_leq([(1, 1, 0)], [(2, 2, 1)])
    assert not wt.inverse_dominance_leq([(1, 1, 0)], [(2, 0, 0)])


def test_inverse_dominance_two_blocks():
    x = [(1, 0), (0, 1)]
    y = [(0, 1), (1, 0)]
    assert wt.inverse_dominance_leq(x, y) and not wt.inverse_dominance_leq(y, x)


def test_levi_helpers():
    assert list(wt.compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert wt.block_index((2, 1)) == [0, 0, 1]
    assert wt.blockwise_sort((1, 3, 2), (2, 1)) == (3, 1, 2)
    assert wt.phi_blocks((1, 3, 2), (2, 1), 3) == ((1, 0, 1), (0, 1, 0))
    with pytest.raises(ValueError):
        wt.blockwise_sort((1, 2), (3,))


def test_casimir_eigenvalue_is_one_based():
    assert wt.casimir_eigenvalue((4, 5, 6), 1) == 4
    with pytest.raises(IndexError):
        wt.casimir_eigenvalue((4,), 2)
