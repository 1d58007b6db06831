import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from etaforms.algnum import ROOT2, SQRT2
from etaforms.bqf import Form, rep_count
from etaforms.formulas import (
    CLASS_PAIR,
    CONDUCTOR,
    INERT,
    RAMIFIED,
    WEBER,
    a47,
    a71,
    a71_sigma,
    a71_trinomial,
    a135,
    a135_first,
    a135_first_alt,
    a135_second,
    a135_second_alt,
    a648,
    a1024,
    a1024_first,
    a1024_first_alt,
    a1024_second,
    a1024_second_alt,
    a1872,
    a1872_extract,
    classify_prime,
    coefficient,
    completion_coefficient,
    completion_series,
    eigenvalue,
    fib_b,
    oracle_coefficient,
    periodic_U,
    smallest_prime_in_class,
    target_from_completions,
    target_series,
    trinomial_G,
    trinomial_T,
)
from etaforms.ntheory import primes_up_to

N = 1500


def test_classify_examples():
    c = classify_prime(-47, 47)
    assert c.verdict == RAMIFIED and c.form == Form(1, 1, 12)
    c = classify_prime(-47, 53)
    assert c.verdict == CLASS_PAIR and c.form == Form(2, 1, 6) and c.s_index == 2
    assert classify_prime(-47, 5).verdict == INERT
    assert classify_prime(-1024, 2).verdict == CONDUCTOR
    assert classify_prime(-648, 3).verdict == CONDUCTOR
    with pytest.raises(ValueError):
        classify_prime(-47, 9)
    with pytest.raises(ValueError):
        classify_prime(-23, 5)


def test_classify_witness_represents_prime():
    for d in (-47, -71, -135, -648, -1024, -1872):
        for p in primes_up_to(700):
            c = classify_prime(d, p)
            if c.verdict == CLASS_PAIR:
                x, y = c.witness
                assert c.form(x, y) == p
                assert rep_count(c.form, p) > 0


def test_weber_degrees():
    assert [WEBER[d].degree for d in (-47, -71, -135, -648, -1024, -1872)] == [5, 7, 6, 6, 8, 16]


def test_fib_b_is_fibonacci():
    assert [fib_b(L) for L in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    with pytest.raises(ValueError):
        fib_b(-1)


def test_periodic_tables():
    assert periodic_U(135, "U", 7) == periodic_U(135, "U", 1) == -1
    assert periodic_U(1024, "U", 1) == ROOT2
    assert periodic_U(1024, "V", 9) == -ROOT2
    with pytest.raises(ValueError):
        periodic_U(648, "V", 1)
    with pytest.raises(ValueError):
        periodic_U(47, "U", -1)


def test_trinomial_values():
    assert trinomial_T(1, 0, 0) == 1
    assert trinomial_G(1, 0) == -1
    assert trinomial_G(0, 0) == 0


def test_a47_routes_agree_with_series():
    s = target_series("47", N)
    for n in range(1, N + 1):
        want = s[n].to_int()
        assert a47(n) == a47(n, "fib") == a47(n, "product") == want, n


def test_a47_examples():
    assert (a47(1), a47(2), a47(6), a47(49)) == (0, 1, 0, -1)


def test_a71_matches_series_and_conjugate_route():
    s = target_series("71", N)
    for n in range(1, N + 1):
        assert a71(n) == a71_sigma(n) == s[n].to_int(), n


def test_a71_trinomial_route():
    rng = random.Random(3)
    s = target_series("71", 20000)
    primes = [p for p in primes_up_to(400) if classify_prime(-71, p).form == Form(2, 1, 9)]
    checked = 0
    while checked < 200:
        n = 1
        for _ in range(rng.randint(1, 4)):
            n *= rng.choice(primes)
        if n > 20000:
            continue
        assert a71_trinomial(n) == s[n].to_int(), n
        checked += 1
    with pytest.raises(ValueError):
        a71_trinomial(5)


def test_a71_prime_of_principal_class():
    p = smallest_prime_in_class(-71, Form(1, 1, 18))
    assert p == 107 and a71(p) == 0


@pytest.mark.parametrize(
    "name,fn",
    [("135a", a135_first), ("135b", a135_second), ("1024a", a1024_first), ("1024b", a1024_second), ("1872", a1872_extract)],
)
def test_extractors_match_series(name, fn):
    s = target_series(name, N)
    for n in range(1, N + 1):
        assert fn(n) == s[n], (name, n)


def test_alternate_forms_agree():
    for n in range(1, 3000):
        assert a135_first(n) == a135_first_alt(n)
        assert a135_second(n) == a135_second_alt(n)
        assert a1024_first(n) == a1024_first_alt(n)
        assert a1024_second(n) == a1024_second_alt(n)


def test_disjoint_supports():
    for n in range(1, 3000):
        if a135(n):
            assert n % 3 in (1, 2)
        if a648(n):
            assert n % 3 in (1, 2)
        if not a1024(n).is_zero():
            assert n % 8 in (1, 5)
        if a1872(n):
            assert n % 12 in (1, 7)


def test_coefficient_matches_oracle():
    for level in (47, 71, 135, 648, 1024, 1872):
        for n in (1, 2, 3, 5, 7, 13, 49, 97, 210, 289):
            assert coefficient(level, n) == oracle_coefficient(level, n), (level, n)
    with pytest.raises(ValueError):
        coefficient(50, 1)


@pytest.mark.parametrize("tag", ["47a1", "47a2", "71a1", "71a2", "71a3", "135", "648", "1024", "1872"])
def test_completion_coefficients_match_series(tag):
    s = completion_series(tag, 800)
    assert s[1] == 1
    for n in range(1, 801):
        assert completion_coefficient(tag, n) == s[n], (tag, n)


@settings(max_examples=60)
@given(st.sampled_from(["47a1", "71a2", "135", "648", "1024", "1872"]), st.integers(2, 60), st.integers(2, 60))
def test_completion_coefficients_multiplicative(tag, m, n):
    if gcd(m, n) == 1:
        assert completion_coefficient(tag, m * n) == completion_coefficient(tag, m) * completion_coefficient(tag, n)


def test_completion_prime_coefficients_are_eigenvalues():
    for tag in ("47a1", "71a3", "135", "648", "1024", "1872"):
        for p in primes_up_to(200):
            assert completion_coefficient(tag, p) == eigenvalue(tag, p), (tag, p)


def test_targets_recovered_from_completions():
    assert target_from_completions(47, 600) == target_series("47", 600)
    assert target_from_completions(71, 600) == target_series("71", 600)


def test_1024_values_live_in_sqrt2():
    assert a1024(1).field is SQRT2
    assert a1024(5).field is SQRT2 and not a1024(5).is_rational()
