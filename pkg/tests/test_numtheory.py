from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, strategies as st

from coxeterk.numtheory import (
    MAX_MODULUS,
    delta,
    divisors,
    epsilon,
    generated_subgroup,
    is_prime,
    nu_mu,
    phi,
    prime_factors,
    sigma_p,
    subgroup_index,
    tau,
    unit_group,
)

PRIMES = [p for p in range(2, 60) if is_prime(p)]


@pytest.mark.parametrize("n, expected", [(1, [1]), (6, [1, 2, 3, 6]), (12, [1, 2, 3, 4, 6, 12])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize("n, expected", [(6, 4), (12, 6), (1, 1)])
def test_delta_examples(n, expected):
    assert delta(n) == expected


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_delta_of_prime_power(p, e):
    assert delta(p**e) == e + 1


@pytest.mark.parametrize("n, expected", [(7, 1), (10, 2), (2, 2)])
def test_epsilon_examples(n, expected):
    assert epsilon(n) == expected


def test_epsilon_rejects_small():
    with pytest.raises(ValueError):
        epsilon(1)


@pytest.mark.parametrize("p, n, expected", [(2, 24, (3, 3)), (5, 7, (0, 7)), (3, 27, (3, 1))])
def test_nu_mu_examples(p, n, expected):
    assert nu_mu(p, n) == expected


def test_nu_mu_rejects_composite():
    with pytest.raises(ValueError):
        nu_mu(4, 8)


def test_unit_group_examples():
    assert unit_group(8).elements == {1, 3, 5, 7}
    assert unit_group(5).elements == {1, 2, 3, 4}
    one = unit_group(1)
    assert one.elements == {0} and one.order == 1


@pytest.mark.parametrize("d, expected", [(3, 1), (7, 1), (1, 1)])
def test_subgroup_index_examples(d, expected):
    assert subgroup_index(d, {-1, 2}) == expected


def test_subgroup_index_nontrivial():
    # <-1, 2> in (Z/17)^*: 2 has order 8 and -1 = 2^4, so index 16/8 = 2
    assert subgroup_index(17, {-1, 2}) == 2
    assert subgroup_index(31, {-1, 2}) == 3


def test_subgroup_rejects_noncoprime_generator():
    with pytest.raises(ValueError):
        subgroup_index(6, {2})


def test_subgroup_respects_bound():
    with pytest.raises(ValueError):
        generated_subgroup(MAX_MODULUS + 1, {1})


def test_sigma_examples():
    assert sigma_p(2, 6) == 2
    assert sigma_p(3, 6) == 2
    assert sigma_p(5, 5) == 1


def test_tau_examples():
    assert tau(6) == 4
    assert tau(1) == 0
    for p in (2, 3, 5, 7):
        for e in (1, 2, 3):
            assert tau(p**e) == e


def _brute_closure(d, gens):
    out = {1}
    changed = True
    while changed:
        changed = False
        for x in list(out):
            for g in gens:
                y = x * g % d
                if y not in out:
                    out.add(y)
                    changed = True
    return out


@given(st.integers(2, 400), st.lists(st.integers(-50, 50), min_size=1, max_size=3))
def test_index_times_order_is_phi(d, raw):
    gens = [g for g in raw if gcd(g % d, d) == 1] or [1]
    sub = generated_subgroup(d, gens)
    assert sub.elements == _brute_closure(d, [g % d for g in gens])
    assert subgroup_index(d, gens) * sub.order == phi(d)
    assert all(gcd(t, d) == 1 for t in sub.elements)
    assert all(x * y % d in sub.elements for x in sub.elements for y in sub.elements)


@given(st.integers(1, 2000))
def test_unit_group_has_phi_elements(d):
    assert unit_group(d).order == phi(d)


@given(st.sampled_from(PRIMES), st.integers(1, 3000))
def test_sigma_lower_bound(p, n):
    nu, _ = nu_mu(p, n)
    assert sigma_p(p, n) * (1 + nu) >= delta(n)


@given(st.integers(1, 3000))
def test_tau_lower_bound(n):
    assert 2 * tau(n) >= delta(n) * len(prime_factors(n))


def test_phi_multiplicative():
    for a in range(1, 101):
        for b in range(1, 101):
            if gcd(a, b) == 1:
                assert phi(a * b) == phi(a) * phi(b)


@given(st.integers(1, 10**5))
def test_divisors_structure(n):
    ds = divisors(n)
    assert ds == sorted(set(ds))
    assert all(n % d == 0 and d * (n // d) == n for d in ds)
    assert set(ds) == {d for d in range(1, int(n**0.5) + 1) if n % d == 0} | {
        n // d for d in range(1, int(n**0.5) + 1) if n % d == 0
    }
