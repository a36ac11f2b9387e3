"""Wheel Laurent polynomials: generators, identities, membership, evaluation."""

import pytest

from bmwcenter.errors import ResourceLimit
from bmwcenter.partitions import Partition
from bmwcenter.scalars import GENERIC, power_regime
from bmwcenter.contentfn import drunk_content_values
from bmwcenter.wheelpoly import (MultiLaurent, degree_cap, elementary_wheel,
                                 evaluate, inverse_coeffs, is_symmetric,
                                 is_wheel, newton_check, power_sum)


def x(n, i, p=1):
    return MultiLaurent.variable(n, i, p)


def test_w0_is_one():
    for n in range(1, 5):
        assert elementary_wheel(n, 0) == MultiLaurent.const(n, 1)


def test_w1_two_variables_golden():
    expected = x(2, 0) - x(2, 0, -1) + x(2, 1) - x(2, 1, -1)
    assert elementary_wheel(2, 1) == expected


def test_power_sum_basics():
    assert power_sum(3, 0).is_zero
    assert power_sum(1, 2) == x(1, 0, 2) - x(1, 0, -2)
    assert power_sum(2, 1) == elementary_wheel(2, 1)


def test_single_variable_newton():
    assert newton_check(1, 1)


def test_two_variable_second_newton():
    # p_2^- = 2 w_2 - w_1^2
    w1 = elementary_wheel(2, 1)
    w2 = elementary_wheel(2, 2)
    assert power_sum(2, 2) == 2 * w2 - w1 * w1


def test_newton_identities_small():
    for n in range(1, 4):
        assert newton_check(n, min(6, degree_cap(n)))


def test_inverse_series_convolution():
    for n in range(1, 4):
        K = min(6, degree_cap(n))
        w = [elementary_wheel(n, k) for k in range(K + 1)]
        v = inverse_coeffs(n, K)
        for k in range(K + 1):
            conv = MultiLaurent(n)
            for i in range(k + 1):
                conv = conv + w[i] * v[k - i]
            expected = MultiLaurent.const(n, 1 if k == 0 else 0)
            assert conv == expected


def test_generators_are_wheel_polynomials():
    for n in range(1, 4):
        for k in range(min(5, degree_cap(n)) + 1):
            wk = elementary_wheel(n, k)
            assert is_symmetric(wk)
            assert is_wheel(wk)


def test_non_wheel_rejected():
    # x1 + x2 is symmetric but not a wheel polynomial
    p = x(2, 0) + x(2, 1)
    assert is_symmetric(p)
    assert not is_wheel(p)
    # x1 alone is not even symmetric
    assert not is_wheel(x(2, 0))


def test_degree_cap_enforced():
    with pytest.raises(ResourceLimit):
        elementary_wheel(2, degree_cap(2) + 1)
    with pytest.raises(ResourceLimit):
        inverse_coeffs(2, degree_cap(2) + 1)


def test_evaluate_matches_manual_substitution():
    lam = Partition((2, 1))
    for r in (GENERIC, power_regime(1, 2)):
        values = drunk_content_values(3, lam, r)
        w2 = elementary_wheel(3, 2)
        got = evaluate(w2, values, r)
        monos = [v.monomial() for v in values]
        from bmwcenter.scalars import LaurentQT
        acc = LaurentQT()
        for e, c in w2.terms.items():
            term = LaurentQT.const(c)
            for m, p in zip(monos, e):
                term = term * m.pow(p)
            acc = acc + term
        assert got == acc


def test_evaluate_arity_checked():
    with pytest.raises(ValueError):
        evaluate(elementary_wheel(2, 1), [], GENERIC)


def test_multilaurent_str():
    p = x(2, 0) - MultiLaurent.const(2, 1)
    s = str(p)
    assert "x1^1" in s and "1" in s
