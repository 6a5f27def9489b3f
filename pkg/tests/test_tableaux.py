import json
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, prod
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from slkcat import tableaux as tb
from slkcat.verify import fixture_payload

GOLDEN = Path(__file__).parent / "golden"


def hook_content(lam, k):
    """#SSYT with entries <= k of the diagram with column heights lam."""
    mu = tb.transpose(lam) if lam else ()
    cells = [(i, j) for i, r in enumerate(mu) for j in range(r)]
    conj = tb.transpose(mu) if mu else ()
    num = prod(Fraction(k + j - i) for i, j in cells)
    den = prod(mu[i] - j + conj[j] - i - 1 for i, j in cells)
    return num / den


def lis(w):
    best = [1] * len(w)
    for i in range(len(w)):
        for j in range(i):
            if w[j] < w[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


def test_fill_example_filled_331():
    T = tb.fill_tableau((3, 3, 1), range(1, 8))
    assert T.rows() == [[3, 6, 7], [2, 5], [1, 4]]
    assert tb.reading_word(T) == tuple(range(1, 8))
    assert not tb.is_column_strict(T) and not tb.is_standard(T)


def test_filled_3321_predicates():
    T = tb.fill_tableau((3, 3, 2, 1), (3, 2, 1, 4, 3, 2, 2, 1, 3))
    assert T.rows() == [[1, 2, 1, 3], [2, 3, 2], [3, 4]]
    assert tb.is_column_strict(T) and not tb.is_semistandard(T)


def test_fill_rejects_wrong_length():
    with pytest.raises(ValueError):
        tb.fill_tableau((2, 1), (1, 2))


@pytest.mark.parametrize("name", ["filled_331", "filled_3321"])
def test_golden_fixture_bytes(name):
    text = json.dumps(fixture_payload(name)) + "\n"
    assert (GOLDEN / f"{name}.json").read_text() == text


def test_enumerate_spec_example():
    ss = tb.enumerate_semistandard((3, 3, 1), 4)
    assert len(ss) == hook_content((3, 3, 1), 4) == 36
    assert [tb.reading_word(t) for t in ss] == sorted(tb.reading_word(t) for t in ss)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("n", range(0, 7))
def test_semistandard_count_matches_hook_content(n, k):
    for lam in tb.partitions(n, k):
        assert len(tb.enumerate_semistandard(lam, k)) == hook_content(lam, k)


def test_semistandard_needs_columns_below_k():
    assert tb.enumerate_semistandard((3,), 2) == []


def test_enumeration_agrees_with_filter():
    for lam in [(2, 2), (3, 1, 1), (2, 1)]:
        brute = [T for T in tb.enumerate_column_strict(lam, 3) if tb.is_semistandard(T)]
        assert tb.enumerate_semistandard(lam, 3) == brute


def test_multipartition_enumeration_is_a_product():
    lam = ((2, 1), (1,))
    assert len(tb.enumerate_semistandard(lam, 3)) == hook_content((2, 1), 3) * 3


def test_semistandard_of_type():
    # each semistandard tableau appears under exactly one type
    lam, k = (2, 2, 1), 3
    total = 0
    seen = set()
    for n1 in range(6):
        for n2 in range(6 - n1):
            d = (1,) * n1 + (2,) * n2 + (3,) * (5 - n1 - n2)
            got = tb.enumerate_semistandard_of_type(lam, d)
            total += len(got)
            seen.update(got)
    assert total == len(seen) == len(tb.enumerate_semistandard(lam, k))


def test_standard_count_is_hook_length():
    for lam in tb.partitions(5):
        std = [T for T in (tb.fill_tableau(lam, a) for a in permutations(range(1, 6))) if tb.is_standard(T)]
        mu = tb.transpose(lam)
        conj = tb.transpose(mu)
        hooks = prod(mu[i] - j + conj[j] - i - 1 for i, r in enumerate(mu) for j in range(r))
        assert len(std) == factorial(5) // hooks


def test_high_tableau_is_semistandard_and_unique_of_its_type():
    for lam in [(3, 2), (2, 2, 1), (1, 1, 1)]:
        T = tb.high_tableau(lam)
        assert tb.is_semistandard(T)
        assert tb.enumerate_semistandard_of_type(lam, tb.high_label(lam)) == [T]


@given(st.permutations(range(1, 7)))
def test_rs_shapes_and_schensted(w):
    P, Q = tb.rs_insert(w)
    assert P.shape == Q.shape
    assert tb.is_standard(Q) and tb.is_semistandard(P)
    # first displayed row = longest increasing subsequence
    assert len(P.rows()[0]) == lis(w)


def test_rs_is_a_bijection():
    n = 5
    pairs = {(tb.rs_insert(w)[0], tb.rs_insert(w)[1]) for w in permutations(range(1, n + 1))}
    assert len(pairs) == factorial(n)


def test_act_and_inverse():
    w = (2, 0, 1)
    assert tb.act(w, "abc") == ("b", "c", "a")
    assert tb.act(tb.inverse_perm(w), tb.act(w, "abc")) == tuple("abc")


@pytest.mark.parametrize("n", range(1, 6))
def test_recording_criterion(n):
    d = tuple(range(n, 0, -1))
    for lam in tb.partitions(n):
        assert tb.recording_criterion(lam, d) == []


def test_recording_criterion_needs_decreasing_type():
    with pytest.raises(ValueError):
        tb.recording_criterion((2, 1), (1, 2, 3))


def test_partition_weight_round_trip():
    for k in range(2, 6):
        for n in range(7):
            for lam in tb.partitions(n, k - 1):
                c = tb.slk_weight_from_partition(lam, k)
                assert tb.partition_from_slk_weight(c) == lam
    assert tb.partition_from_slk_weight((1, 0, 2)) == (3, 3, 1)


def test_partition_validation():
    with pytest.raises(ValueError):
        tb.as_partition((1, 2))
    with pytest.raises(ValueError):
        tb.as_partition((2, 0))


def test_partition_generators():
    assert list(tb.partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(tb.multipartitions(2, 2))) == 5


def test_tableau_json_round_trip():
    for T in tb.enumerate_semistandard((2, 1), 3):
        assert tb.Tableau.from_json(json.loads(json.dumps(T.to_json()))) == T


def test_column_choice_oracle():
    # one column of height h: C(k, h) fillings, all semistandard
    for k in range(1, 5):
        for h in range(1, k + 1):
            assert len(tb.enumerate_semistandard((h,), k)) == len(list(combinations(range(k), h)))
