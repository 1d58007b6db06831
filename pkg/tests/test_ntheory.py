import pytest
from hypothesis import given, settings, strategies as st

from etaforms.bqf import Form, rep_count
from etaforms.formulas import WEBER
from etaforms.ntheory import (
    ModPoly,
    PrimePower,
    factor_degree_pattern,
    factorize,
    is_prime,
    kronecker,
    legendre,
    ord_p,
    poly_rem_frobenius,
    primes_up_to,
    sqrt_mod,
)


def naive_prime(n):
    return n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))


def test_is_prime_matches_trial_division():
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if naive_prime(n)]
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


@pytest.mark.parametrize("n,m,expected", [(5, 1, 1), (3, 2, -1), (-47, 53, 1), (2, 3, -1), (6, 4, 0), (-1, 4, 1)])
def test_kronecker_examples(n, m, expected):
    assert kronecker(n, m) == expected


def test_kronecker_matches_euler_criterion():
    for p in primes_up_to(499)[1:]:
        for n in range(-499, 500):
            euler = pow(n, (p - 1) // 2, p)
            assert kronecker(n, p) == (-1 if euler == p - 1 else euler)


@settings(max_examples=300)
@given(st.integers(-200, 200), st.integers(1, 200), st.integers(1, 200))
def test_kronecker_multiplicative_in_m(n, m1, m2):
    assert kronecker(n, m1 * m2) == kronecker(n, m1) * kronecker(n, m2)


def test_kronecker_rejects_bad_modulus():
    with pytest.raises(ValueError):
        kronecker(3, 0)


def test_ord_p():
    assert ord_p(12, 2) == 2
    assert ord_p(12, 5) == 0
    assert ord_p(47**2, 47) == 2
    with pytest.raises(ValueError):
        ord_p(0, 3)


def test_factorize_examples():
    assert factorize(1) == []
    assert factorize(94) == [PrimePower(2, 1), PrimePower(47, 1)]
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]


@given(st.integers(1, 10**7))
def test_factorize_reconstructs(n):
    facs = factorize(n)
    primes = [p for p, _ in facs]
    assert primes == sorted(set(primes))
    assert all(naive_prime(p) and k >= 1 for p, k in facs)
    acc = 1
    for p, k in facs:
        acc *= p**k
    assert acc == n


def test_sqrt_mod_examples():
    assert sqrt_mod(-47, 7) == 3
    assert sqrt_mod(0, 5) == 0
    assert sqrt_mod(2, 5) is None


def test_sqrt_mod_all_residues():
    for p in primes_up_to(400)[1:]:
        for a in range(-p, p):
            r = sqrt_mod(a, p)
            if a % p == 0:
                assert r == 0
            elif legendre(a, p) == -1:
                assert r is None
            else:
                assert r * r % p == a % p and r <= p - r


@given(st.sampled_from(primes_up_to(10**4)[1:]), st.integers())
def test_sqrt_mod_property(p, a):
    r = sqrt_mod(a, p)
    assert (r is None) == (kronecker(a, p) == -1)
    if r is not None:
        assert (r * r - a) % p == 0


def naive_rem(w: ModPoly) -> ModPoly:
    z_p = ModPoly(w.modulus, [0] * w.modulus + [1])
    return z_p % w


def test_frobenius_examples():
    assert poly_rem_frobenius(ModPoly(5, [1, 0, 1])) == ModPoly(5, [0, 1])
    assert poly_rem_frobenius(ModPoly(3, [-1, 1])) == ModPoly(3, [1])
    w47 = WEBER[-47].mod(2)
    assert poly_rem_frobenius(w47) == ModPoly(2, [0, 0, 1])


def test_frobenius_matches_naive_power_for_weber_polynomials():
    for w in WEBER.values():
        for p in primes_up_to(99):
            m = w.mod(p)
            assert poly_rem_frobenius(m) == naive_rem(m)


def test_frobenius_rejects_non_monic():
    with pytest.raises(ValueError):
        poly_rem_frobenius(ModPoly(5, [1, 2]))


def test_modpoly_arithmetic():
    a = ModPoly(7, [1, 2, 3])
    b = ModPoly(7, [6, 1])
    q, r = divmod(a, b)
    assert q * b + r == a and r.degree < b.degree
    assert ModPoly(7, [7, 14]).is_zero()
    assert str(ModPoly(5, [1, 0, 1])).endswith("(mod 5)")
    assert a(2) == (1 + 4 + 12) % 7


def test_factor_degree_pattern_examples():
    assert factor_degree_pattern(ModPoly(5, [1, 0, 1])) == [1, 1]
    w135 = WEBER[-135]
    for p in primes_up_to(500):
        if rep_count(Form(1, 1, 34), p) and 135 % p:
            assert factor_degree_pattern(w135.mod(p)) == [1] * 6
        if rep_count(Form(2, 1, 17), p) and 135 % p:
            assert factor_degree_pattern(w135.mod(p)) == [6]


def test_factor_degree_pattern_sums_to_degree():
    for w in WEBER.values():
        for p in primes_up_to(200):
            m = w.mod(p)
            if m.degree != w.degree:
                continue
            try:
                pattern = factor_degree_pattern(m)
            except ValueError:
                continue
            assert sum(pattern) == w.degree


def test_factor_degree_pattern_rejects_square():
    with pytest.raises(ValueError):
        factor_degree_pattern(ModPoly(5, [1, 2, 1]))
