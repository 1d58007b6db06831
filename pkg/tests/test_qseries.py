import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from etaforms.algnum import LAMBDA, SQRT5
from etaforms.bqf import Form, reduced, transform
from etaforms.qseries import (
    EtaQuotientSpec,
    QSeries,
    builder_identities_suite,
    eta_quotient,
    euler_E,
    jtp_product,
    phi,
    psi,
    theta_f,
    theta_form,
    theta_normalize,
)


def ints(s: QSeries) -> list[int]:
    return s.integer_coefficients()


def brute_theta(f: Form, order: int) -> list[int]:
    a, b, c = f
    out = [0] * (order + 1)
    for x in range(-order, order + 1):
        for y in range(-order, order + 1):
            n = a * x * x + b * x * y + c * y * y
            if n <= order:
                out[n] += 1
    return out


def test_arithmetic_examples():
    geom = QSeries.from_ints([1] * 6)
    assert ints((QSeries.from_ints([1, -1] + [0] * 4) * geom)) == [1, 0, 0, 0, 0, 0]
    assert ints(QSeries.from_ints([0, 1, 1]) + QSeries.from_ints([0, 1, -1])) == [0, 2, 0]
    e = euler_E(1, 6)
    assert ints(e * e) == [1, -2, -1, 2, 1, 2, -2]


def test_order_propagates_as_minimum():
    a = QSeries.from_ints([1, 2, 3, 4])
    b = QSeries.from_ints([1, 1])
    assert (a * b).order == 1 and (a + b).order == 1
    with pytest.raises(ValueError):
        a.first_difference(b, 3)


def test_euler_E_examples():
    assert ints(euler_E(1, 7)) == [1, -1, -1, 0, 0, 1, 0, 1]
    assert ints(euler_E(2, 5)) == [1, 0, -1, 0, -1, 0]
    e = euler_E(1, 15)
    assert e[12] == -1 and e[15] == -1


def test_euler_E_support_is_pentagonal():
    N = 1000
    e = ints(euler_E(1, N))
    pent = {}
    for k in range(-40, 41):
        n = k * (3 * k - 1) // 2
        if n <= N:
            pent[n] = (-1) ** k
    assert all(e[n] == pent.get(n, 0) for n in range(N + 1))


def test_euler_E_matches_product():
    N = 120
    acc = QSeries.one(N)
    for k in range(1, N + 1):
        acc = acc * (QSeries.one(N) - QSeries.monomial(k, N))
    assert acc == euler_E(1, N)


def test_eta_quotient_examples():
    assert ints(eta_quotient(EtaQuotientSpec(2, ((1, 1), (47, 1))), 4)) == [0, 0, 1, -1, -1]
    assert ints(eta_quotient(EtaQuotientSpec(0, ((1, -1), (2, 2))), 6)) == [1, 1, 0, 1, 0, 0, 1]
    assert ints(eta_quotient(EtaQuotientSpec(0, ((2, 5), (4, -2), (1, -2))), 4)) == [1, 2, 0, 0, 2]


def test_eta_quotient_inverse_cancels():
    spec = EtaQuotientSpec.combine(0, [(1, 1), (1, -1)])
    assert spec.factors == ()
    s = eta_quotient(EtaQuotientSpec(0, ((3, 2),)), 200) * eta_quotient(EtaQuotientSpec(0, ((3, -2),)), 200)
    assert s == QSeries.one(200)


def test_eta_spec_metadata():
    spec = EtaQuotientSpec(2, ((1, 1), (47, 1)))
    assert spec.weight == 1 and spec.is_proper() and spec.level == 47
    with pytest.raises(ValueError):
        EtaQuotientSpec(0, ((1, 1), (1, 2)))


def test_theta_f_examples():
    assert ints(phi(4)) == [1, 2, 0, 0, 2]
    assert ints(psi(6)) == [1, 1, 0, 1, 0, 0, 1]
    assert ints(theta_f(0, 12, 12)) == [2] + [0] * 11 + [2]


def _exponents(u, v, span):
    return Counter(u * n * (n + 1) // 2 + v * n * (n - 1) // 2 for n in range(-span, span + 1))


@pytest.mark.parametrize("u,v", [(-2, 5), (-7, 9), (-24, 36), (4, -1)])
def test_theta_normalize_shifts_exponents(u, v):
    pre, up, vp = theta_normalize(u, v)
    assert up >= 0 and vp >= 0 and up + vp == u + v
    lhs = _exponents(u, v, 60)
    rhs = Counter({e + pre: k for e, k in _exponents(up, vp, 60).items()})
    low = 100  # both sums agree on every exponent below this bound
    assert {e: k for e, k in lhs.items() if e < low} == {e: k for e, k in rhs.items() if e < low}


def test_theta_f_rejects_negative_powers():
    with pytest.raises(ValueError):
        theta_f(-2, 5, 30)
    with pytest.raises(ValueError):
        theta_f(-1, 3, 10)
    with pytest.raises(ValueError):
        theta_f(1, -1, 10)


@pytest.mark.parametrize("u", range(1, 13))
def test_theta_f_symmetric(u):
    for v in range(1, 13):
        assert theta_f(u, v, 150) == theta_f(v, u, 150)


def test_theta_form_examples():
    b = theta_form(Form(1, 1, 12), 12)
    assert (b[0], b[1], b[12]) == (1, 2, 4)
    assert ints(theta_form(Form(1, 0, 1), 4)) == [1, 4, 4, 0, 4]
    assert theta_form(Form(2, 1, 6), 2)[2] == 2


@pytest.mark.parametrize("f", [Form(1, 1, 12), Form(2, 1, 6), Form(6, 5, 3), Form(7, 2, 67), Form(16, 8, 17), Form(3, 3, 12)])
def test_theta_form_matches_box_enumeration(f):
    assert ints(theta_form(f, 60)) == brute_theta(f, 60)


def test_theta_form_class_invariant():
    rng = random.Random(5)
    base = [Form(2, 1, 6), Form(5, 4, 52), Form(9, 6, 53), Form(11, 10, 17)]
    for f in base:
        t = theta_form(f, 200)
        done = 0
        while done < 20:
            m = tuple(tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(2))
            if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1:
                continue
            g = transform(f, m)
            assert theta_form(g, 200) == t
            assert reduced(g) == reduced(f)
            done += 1
        assert theta_form(Form(f.a, -f.b, f.c), 200) == t


def test_builder_identities_examples():
    suite = {name: (l, r) for name, l, r in builder_identities_suite(12)}
    l, r = suite["pentcor"]
    assert ints(l) == ints(r) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
    assert ints(jtp_product(1, 1, 4)) == [1, 2, 0, 0, 2]
    m31 = {name: (l, r) for name, l, r in builder_identities_suite(1)}["mod31"]
    assert ints(m31[0]) == ints(m31[1]) == [1, 2]


def test_builder_identities_all_hold():
    suite = builder_identities_suite(400)
    assert len(suite) == 19
    for name, lhs, rhs in suite:
        assert lhs.first_difference(rhs) is None, name


def test_transforms():
    s = QSeries.from_ints([1, 2, 3, 4, 5])
    assert ints(s.twist()) == [1, -2, 3, -4, 5]
    assert ints(s.dilate(2, 6)) == [1, 0, 2, 0, 3, 0, 4]
    assert ints(s.shift(2, 4)) == [0, 0, 1, 2, 3]
    assert ints(s.extract(1, 2)) == [0, 2, 0, 4, 0]
    with pytest.raises(ValueError):
        s.dilate(2, 10)
    with pytest.raises(IndexError):
        s[5]


def test_field_coefficients():
    s = QSeries.from_ints([1, 1, 1]).scale(LAMBDA)
    assert s.field is SQRT5
    assert s[1] == LAMBDA
    assert s.is_integral()
    assert not (s / 2).is_integral()
    assert "lambda" in s.to_text()
    assert s.to_records()[0] == "n=0 coeff=lambda"


@settings(max_examples=40)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=30), st.lists(st.integers(-9, 9), min_size=1, max_size=30))
def test_ring_laws(a, b):
    x, y = QSeries.from_ints(a), QSeries.from_ints(b)
    assert x * y == y * x
    assert (x + y) - y == x.truncate(min(x.order, y.order))
    if a[0] == 1:
        assert x * x.inverse() == QSeries.one(x.order)
