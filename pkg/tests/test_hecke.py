import pytest
from hypothesis import given, settings, strategies as st

from etaforms.algnum import LAMBDA, MU, SQRT5
from etaforms.bqf import Form
from etaforms.formulas import DISCRIMINANTS, completion_series, eigenvalue
from etaforms.hecke import HeckeContext, apply_Tp, coeff_recursion, coeff_sequence, eigen_check, first_nonzero
from etaforms.qseries import QSeries, theta_form


def B(a, b, c, order):
    return theta_form(Form(a, b, c), order)


def test_apply_Tp_examples():
    N = 600
    assert apply_Tp(B(1, 1, 12, N), -47, 2) == B(2, 1, 6, N // 2).scale(2)
    assert apply_Tp(B(1, 0, 162, N), -648, 2) == B(2, 0, 81, N // 2)
    assert apply_Tp(B(1, 1, 34, N), -135, 3) == B(1, 1, 4, N // 9).dilate(3, N // 3)


def test_apply_Tp_definition_pointwise():
    s = B(2, 1, 6, 300)
    t = apply_Tp(s, -47, 7)  # (-47/7) = 1
    assert t.order == 300 // 7
    for n in range(t.order + 1):
        assert t[n] == s[7 * n] + (s[n // 7] if n % 7 == 0 else 0)


def test_apply_Tp_inert_prime_annihilates_theta():
    s = B(1, 1, 12, 500)
    t = apply_Tp(s, -47, 5)  # (-47/5) = -1
    assert all(t[n] == s[5 * n] - (s[n // 5] if n % 5 == 0 else 0) for n in range(t.order + 1))
    assert t == QSeries.zero(t.order)


def test_context_validation():
    with pytest.raises(ValueError):
        HeckeContext(-47, 4, 100)
    with pytest.raises(ValueError):
        HeckeContext(-47, 7, 5)
    assert HeckeContext(-47, 7, 100).output_order == 14


coeffs = st.lists(st.integers(-20, 20), min_size=60, max_size=60)


@settings(max_examples=50)
@given(coeffs, coeffs, st.integers(-5, 5), st.sampled_from([2, 3, 5, 7, 11]))
def test_Tp_is_linear(a, b, k, p):
    x, y = QSeries.from_ints(a), QSeries.from_ints(b)
    lhs = apply_Tp(x + y.scale(k), -47, p)
    assert lhs == apply_Tp(x, -47, p) + apply_Tp(y, -47, p).scale(k)


def test_eigen_check_examples():
    N = 2000
    f = completion_series("47a1", N)
    assert f.field is SQRT5
    assert eigen_check(f, -47, 2) == -MU  # 2 is represented by (2, 1, 6)
    assert eigen_check(f, -47, 3) == -LAMBDA  # 3 is represented by (3, 1, 4)
    assert eigen_check(f, -47, 5) == 0  # inert
    assert eigen_check(f, -47, 47) == 1
    assert eigen_check(B(1, 1, 12, N), -47, 2) is None


def test_eigen_check_recovers_tabulated_eigenvalues():
    N = 2000
    for tag in ("47a2", "71a1", "135", "648", "1024"):
        f = completion_series(tag, N)
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
            assert eigen_check(f, DISCRIMINANTS[int(tag.split("a")[0])], p) == eigenvalue(tag, p), (tag, p)


def test_eigen_check_rejects_zero_series():
    with pytest.raises(ValueError):
        eigen_check(QSeries.zero(50), -47, 2)


def test_coeff_recursion_examples():
    assert coeff_recursion(2, 1, 3) == 4
    assert coeff_recursion(0, -1, 4) == 1
    assert coeff_recursion(-MU, 1, 2) == MU
    assert coeff_sequence(1, 1, 6) == [1, 1, 0, -1, -1, 0, 1]
    with pytest.raises(ValueError):
        coeff_recursion(1, 1, -1)


def test_coeff_recursion_matches_eigenform_prime_powers():
    N = 3000
    f = completion_series("47a1", N)
    for p in (2, 3, 7, 17):
        hp = eigen_check(f, -47, p)
        for k in range(1, 8):
            if p**k > N:
                break
            assert f[p**k] == coeff_recursion(hp, 1, k)


def test_first_nonzero():
    assert first_nonzero(QSeries.from_ints([0, 0, 3])) == 2
    assert first_nonzero(QSeries.zero(9)) is None
    assert first_nonzero(QSeries.from_ints([0, 0, 3]), upto=1) is None
