from __future__ import annotations

import cmath
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zonodt.closed_form import (
    catalan,
    check_partition,
    cohen_check,
    cohen_orthogonality_check,
    divisors,
    dset_orbit_count,
    dt_multipartite,
    dt_via_orbits,
    enumerate_dset,
    euler_phi,
    genus_complete,
    mobius,
    orbit_count_by_sorting,
    orbit_formula,
    partitions,
    ramanujan_genus_identity,
    ramanujan_sum,
    reineke_dt,
)
from zonodt.divisors import numerical_dt
from zonodt.errors import CapExceeded, ValidationError
from zonodt.quiver import multipartite_quiver


def ramanujan_by_roots(d, b):
    total = sum(cmath.exp(2j * cmath.pi * a * b / d) for a in range(1, d + 1) if gcd(a, d) == 1)
    return round(total.real)


@given(st.integers(1, 60), st.integers(-40, 200))
def test_ramanujan_sum_matches_roots_of_unity(d, b):
    assert ramanujan_sum(d, b) == ramanujan_by_roots(d, b)


@given(st.integers(1, 300))
def test_arithmetic_functions(n):
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)
    assert sum(euler_phi(d) for d in divisors(n)) == n
    assert euler_phi(n) == sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def test_known_values():
    assert ramanujan_sum(4, 2) == -2
    assert dt_multipartite(3, (2, 2)) == 126
    assert reineke_dt(3, 4) == 28
    assert reineke_dt(1, 3) == 1
    assert reineke_dt(1, 4) == 2
    assert genus_complete(1, 3) == 1


def test_two_loop_quiver_gives_catalan_like_sequence():
    # the 2-loop quiver (m = 1) has DT invariants 1, 1, 1, 2, 5, 13, ...
    assert [reineke_dt(1, n) for n in range(1, 7)] == [1, 1, 1, 2, 5, 13]
    assert catalan(4) == 14


@pytest.mark.parametrize("q", range(1, 31))
def test_cohen_orthogonality(q):
    for d in divisors(q):
        for e in divisors(q):
            for p in range(q):
                assert cohen_orthogonality_check(p, q, d, e).passed


def test_cohen_three_factors_brute_vs_convolution():
    for q in (6, 8, 9):
        for ds in [(q, q, q), (1, q, q), (2, 2, 2)]:
            if any(q % d for d in ds):
                continue
            for p in range(q):
                a = cohen_check(p, q, ds)
                b = cohen_check(p, q, ds, brute=False)
                assert a.lhs == b.lhs and a.passed


def test_cohen_rejects_non_divisor():
    with pytest.raises(ValidationError):
        cohen_check(0, 6, (4,))


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert check_partition([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(ValidationError):
        check_partition([2, 0])


def test_enumerate_dset():
    pts = enumerate_dset(1, 3, 2, 1)
    assert pts == [(0, 1), (1, 0), (2, 2)]
    with pytest.raises(CapExceeded):
        enumerate_dset(3, 4, 6, 0)
    with pytest.raises(ValidationError):
        enumerate_dset(1, 3, 2, 3)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_orbit_formula_matches_counting(m, n):
    for lam in partitions(n):
        for s in range(m * n):
            expected = orbit_formula(m, lam, s)
            assert dset_orbit_count(m, n, lam, s) == expected
            if (m * n) ** n <= 20_000:
                assert orbit_count_by_sorting(m, n, lam, s) == expected


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_dt_formulas_agree(m, n):
    assert ramanujan_genus_identity(m, n)
    assert dt_multipartite(m, (n,)) == reineke_dt(m, n)
    for lam in partitions(n):
        assert dt_multipartite(m, lam) == dt_via_orbits(m, lam)


@pytest.mark.parametrize("m, lam", [(1, (2, 1)), (1, (2, 2)), (2, (2, 1)), (1, (1, 1, 1)), (2, (3,))])
def test_dt_multipartite_counts_break_divisor_orbits(m, lam):
    assert numerical_dt(multipartite_quiver(m, len(lam)), lam) == dt_multipartite(m, lam)


def test_invalid_inputs():
    with pytest.raises(ValidationError):
        dt_multipartite(0, (2,))
    with pytest.raises(ValidationError):
        dt_multipartite(1, (1,))
    with pytest.raises(ValidationError):
        mobius(0)
