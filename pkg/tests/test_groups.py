import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psiprime import (
    AbelianGroup,
    DomainError,
    Partition,
    PGroupType,
    SizeLimitError,
    brute_force_spectrum,
    canonicalize,
    enumerate_abelian_groups,
    group_type_to_partition,
    order_spectrum,
    partition_to_group_type,
    partitions_of,
)
from oracles import partition_count


def comps(G):
    return {p: list(q.parts) for p, q in G.components}


# ---------------------------------------------------------------- canonicalize

def test_canonicalize_crt_split():
    assert comps(canonicalize([6])) == {2: [1], 3: [1]}


def test_canonicalize_prime_power_split():
    assert comps(canonicalize([4, 6])) == {2: [2, 1], 3: [1]}


def test_canonicalize_identifies_isomorphic_spellings():
    a = canonicalize([2, 2, 2, 2, 3])
    b = canonicalize([2, 6, 2, 2])
    assert a == b
    assert comps(a) == {2: [1, 1, 1, 1], 3: [1]}


def test_canonicalize_trivial_and_errors():
    assert canonicalize([]) == AbelianGroup(())
    with pytest.raises(DomainError):
        canonicalize([1])
    with pytest.raises(DomainError):
        canonicalize([0, 6])


@given(st.lists(st.integers(min_value=2, max_value=200), max_size=6), st.randoms())
def test_canonicalize_permutation_invariant(orders, rng):
    shuffled = orders[:]
    rng.shuffle(shuffled)
    assert canonicalize(orders) == canonicalize(shuffled)


@given(st.lists(st.integers(min_value=2, max_value=100), min_size=1, max_size=4))
def test_canonicalize_agrees_with_prime_power_respelling(orders):
    # replacing every entry by its prime-power factors is the CRT respelling
    respelled = []
    for q in orders:
        left = q
        d = 2
        while d * d <= left:
            if left % d == 0:
                pe = 1
                while left % d == 0:
                    pe *= d
                    left //= d
                respelled.append(pe)
            d += 1
        if left > 1:
            respelled.append(left)
    assert canonicalize(orders) == canonicalize(respelled)


# ---------------------------------------------------------------- enumeration

def test_enumerate_36_exact_order():
    got = [comps(G) for G in enumerate_abelian_groups(36)]
    assert got == [
        {2: [1, 1], 3: [1, 1]},
        {2: [1, 1], 3: [2]},
        {2: [2], 3: [1, 1]},
        {2: [2], 3: [2]},
    ]


def test_enumerate_prime_and_48():
    assert len(enumerate_abelian_groups(7)) == 1
    assert len(enumerate_abelian_groups(48)) == 5  # p(4) * p(1)


@pytest.mark.parametrize("m", [1, 2, 12, 64, 360, 1024, 2**10 * 3**4])
def test_enumerate_count_formula(m):
    groups = enumerate_abelian_groups(m)
    expected = 1
    left = m
    d = 2
    while d * d <= left:
        if left % d == 0:
            v = 0
            while left % d == 0:
                v += 1
                left //= d
            expected *= partition_count(v)
        d += 1
    if left > 1:
        expected *= partition_count(1)
    assert len(groups) == expected
    assert len(set(groups)) == len(groups)
    assert all(G.order == m for G in groups)


def test_enumerate_cap():
    with pytest.raises(SizeLimitError):
        enumerate_abelian_groups(10**6 + 1)
    assert len(enumerate_abelian_groups(10**6)) > 1


# ---------------------------------------------------------------- bijection

def test_partition_to_group_type_examples():
    t = partition_to_group_type(Partition((2, 1)), 2)
    assert (t.p, t.alphas) == (2, (1, 2))
    t = partition_to_group_type(Partition((1, 1, 1)), 3)
    assert (t.p, t.alphas) == (3, (1, 1, 1))
    assert t.order == 27 and t.rank == 3


def test_group_type_bijection_round_trip():
    for p in (2, 3, 5):
        for n in range(1, 11):
            for q in partitions_of(n):
                t = partition_to_group_type(q, p)
                assert group_type_to_partition(t) == q


def test_partition_to_group_type_rejects_nonprime():
    with pytest.raises(DomainError):
        partition_to_group_type(Partition((1,)), 4)
    big = 2**31 + 11
    with pytest.raises(DomainError):
        partition_to_group_type(Partition((1,)), big)
    t = partition_to_group_type(Partition((1,)), big, assume_prime=True)
    assert t.order == big


def test_pgroup_type_validation():
    with pytest.raises(DomainError):
        PGroupType(2, ())
    with pytest.raises(DomainError):
        PGroupType(2, (2, 1))  # descending


# ---------------------------------------------------------------- spectra

def spectrum_dict(G):
    return order_spectrum(G).as_dict()


def test_order_spectrum_examples():
    assert spectrum_dict(canonicalize([4])) == {1: 1, 2: 1, 4: 2}
    assert spectrum_dict(canonicalize([2, 2])) == {1: 1, 2: 3}
    assert spectrum_dict(canonicalize([4, 9])) == {
        1: 1, 2: 1, 4: 2, 3: 2, 6: 2, 12: 4, 9: 6, 18: 6, 36: 12,
    }


def test_brute_force_spectrum_examples():
    assert brute_force_spectrum(canonicalize([6])).as_dict() == {1: 1, 2: 1, 3: 2, 6: 2}
    assert brute_force_spectrum(AbelianGroup(())).as_dict() == {1: 1}


def test_brute_force_cap():
    G = canonicalize([2] * 17)  # order 131072
    with pytest.raises(SizeLimitError):
        brute_force_spectrum(G)


def test_spectra_agree_up_to_200():
    for m in range(1, 201):
        for G in enumerate_abelian_groups(m):
            assert order_spectrum(G) == brute_force_spectrum(G), G


@given(st.integers(min_value=1, max_value=400))
@settings(max_examples=60)
def test_spectrum_invariants(m):
    for G in enumerate_abelian_groups(m):
        s = order_spectrum(G)
        d = s.as_dict()
        assert d[1] == 1
        assert s.total == G.order == m
        assert all(m % order == 0 for order in d)


def test_spectrum_multiplicative_convolution():
    # coprime direct factors convolve multiplicatively
    for m1 in range(2, 23):
        for m2 in range(2, 23):
            if m1 * m2 > 500 or math.gcd(m1, m2) != 1:
                continue
            for G1 in enumerate_abelian_groups(m1):
                for G2 in enumerate_abelian_groups(m2):
                    product = canonicalize(G1.cyclic_factors() + G2.cyclic_factors())
                    s1 = order_spectrum(G1).as_dict()
                    s2 = order_spectrum(G2).as_dict()
                    expected = {
                        d1 * d2: c1 * c2
                        for d1, c1 in s1.items()
                        for d2, c2 in s2.items()
                    }
                    assert order_spectrum(product).as_dict() == expected


def test_cyclic_factors_matches_list_notation():
    assert canonicalize([4, 3, 3]).cyclic_factors() == [4, 3, 3]
    assert AbelianGroup(()).cyclic_factors() == []
