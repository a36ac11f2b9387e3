"""Regimes, content values and exact Laurent/series arithmetic."""

from fractions import Fraction

import pytest

from bmwcenter.errors import RegimeMismatch
from bmwcenter.scalars import (ADD, Content, ContentValue, GENERIC, LaurentQT,
                               REMOVE, SeriesT, content_value, delta,
                               expand_W_series, geometric, linear_factor,
                               power_regime, quantum_integer, regime_from_text,
                               value_from_text)


def test_regime_parsing():
    assert regime_from_text("generic") is GENERIC
    assert regime_from_text("q^3") == power_regime(1, 3)
    assert regime_from_text("-q^-1") == power_regime(-1, -1)
    assert regime_from_text("1") == power_regime(1, 0)
    with pytest.raises(ValueError):
        regime_from_text("z^2")


def test_regime_predicates_and_str():
    assert GENERIC.is_generic and not GENERIC.is_power
    r = power_regime(-1, 4)
    assert r.is_power and r.is_even_power
    assert not power_regime(1, 3).is_even_power
    assert str(r) == "-q^4"
    assert str(power_regime(1, 0)) == "q^0"


def test_content_values_generic():
    assert content_value(Content(ADD, 0), GENERIC) == ContentValue("generic", 1, 0)
    assert content_value(Content(ADD, 1), GENERIC) == ContentValue("generic", 1, 2)
    assert content_value(Content(REMOVE, 1), GENERIC) == ContentValue("generic", -1, -2)
    assert content_value(Content(ADD, -1), GENERIC) == ContentValue("generic", 1, -2)


def test_content_values_power():
    # adding a box on diagonal 1 with t = -q^-1 gives the value -q
    r = power_regime(-1, -1)
    assert content_value(Content(ADD, 1), r) == ContentValue("power", -1, 1)
    # removing it inverts the exponent but keeps the sign
    assert content_value(Content(REMOVE, 1), r) == ContentValue("power", -1, -1)


def test_value_group_laws_exhaustive():
    for r in (GENERIC, power_regime(1, 2), power_regime(-1, 3)):
        vals = [content_value(Content(s, i), r)
                for s in (ADD, REMOVE) for i in range(-10, 11)]
        for v in vals:
            assert (v * v.inverse()).is_identity
            assert v.inverse().inverse() == v
        for a in vals[:8]:
            for b in vals[:8]:
                assert a * b == b * a
                for c in vals[:4]:
                    assert (a * b) * c == a * (b * c)


def test_value_text_round_trip():
    r = power_regime(1, 2)
    v = content_value(Content(ADD, 3), r)
    assert value_from_text(str(v), r) == v
    g = content_value(Content(REMOVE, 2), GENERIC)
    assert value_from_text(str(g), GENERIC) == g


def test_value_regime_mismatch():
    with pytest.raises(RegimeMismatch):
        ContentValue("generic", 1, 0) * ContentValue("power", 1, 0)


def test_laurent_arithmetic():
    q = LaurentQT.monomial(1)
    t = LaurentQT.monomial(0, 1)
    p = (q + t) * (q - t)
    assert p == q * q - t * t
    assert (p - p).is_zero
    assert q.pow(3) == LaurentQT.monomial(3)
    assert q.pow(-2) == LaurentQT.monomial(-2)
    assert LaurentQT.const(Fraction(1, 2)) * 2 == LaurentQT.const(1)


def test_laurent_str():
    p = LaurentQT.monomial(2) - LaurentQT.const(1)
    assert str(p) == "1 - q^2" or str(p) == "- 1 + q^2"


def test_quantum_integers():
    assert quantum_integer(0).is_zero
    assert quantum_integer(1) == LaurentQT.const(1)
    assert quantum_integer(2) == LaurentQT.monomial(1) + LaurentQT.monomial(-1)
    for N in range(-6, 7):
        assert quantum_integer(-N) == -quantum_integer(N)
        # (q - q^-1) [N]_q = q^N - q^-N
        lhs = (LaurentQT.monomial(1) - LaurentQT.monomial(-1)) * quantum_integer(N)
        assert lhs == LaurentQT.monomial(N) - LaurentQT.monomial(-N)


def test_delta_power_regimes():
    # t = q^0 = 1 collapses the loop value to 1
    assert delta(power_regime(1, 0)) == LaurentQT.const(1)
    # t = q^3: delta = [3]_q + 1
    assert delta(power_regime(1, 3)) == quantum_integer(3) + LaurentQT.const(1)
    # t = -q: delta = [-1]_q + 1 = 0
    assert delta(power_regime(-1, 1)).is_zero


def test_delta_generic_pair():
    num, den = delta(GENERIC)
    # num = t - t^-1 + q - q^-1, den = q - q^-1
    assert den == LaurentQT.monomial(1) - LaurentQT.monomial(-1)
    assert num - den == LaurentQT.monomial(0, 1) - LaurentQT.monomial(0, -1)


def test_series_inverse():
    v = ContentValue("power", 1, 2)
    s = linear_factor(v, 6)
    prod = s * s.inverse()
    assert prod == SeriesT.one(6)
    g = geometric(v, 6)
    assert (g * linear_factor(v, 6)) == SeriesT.one(6)


def test_expand_W_series_single_value():
    v = ContentValue("power", 1, 2)
    s = expand_W_series([v], 3)
    # (1 - q^-2 T)/(1 - q^2 T): coefficient of T^k is q^2k - q^(2k-4)
    assert s[0] == LaurentQT.const(1)
    for k in range(1, 4):
        assert s[k] == LaurentQT.monomial(2 * k) - LaurentQT.monomial(2 * k - 4)


def test_expand_W_series_cancellation():
    v = ContentValue("power", 1, 3)
    s = expand_W_series([v, v.inverse()], 5)
    assert s == SeriesT.one(5)
