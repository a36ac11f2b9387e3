"""Drunk content multisets, reduced signatures, pairing and series checks."""

import random
from collections import Counter

import pytest

from bmwcenter.contentfn import (WheelSignature, drunk_content_values,
                                 drunk_contents, multiplicativity_check,
                                 pairing_set, reduce_values, series_consistency,
                                 signature, signature_equal, signature_json,
                                 skew_signature)
from bmwcenter.errors import RegimeMismatch, ShapeLevelMismatch
from bmwcenter.partitions import EMPTY, Partition, diagonal_datum
from bmwcenter.scalars import (ADD, Content, ContentValue, GENERIC,
                               content_value, power_regime)
from bmwcenter.tableaux import content_sequence, drunk_path, enumerate_lambda


def power_sig(entries):
    return WheelSignature("power", {ContentValue("power", 1, b): e
                                    for b, e in entries.items()})


def test_drunk_contents_closed_form():
    mult = drunk_contents(4, Partition((2,)))
    assert mult == Counter({Content(ADD, 0): 2, Content(-ADD, 0): 1,
                            Content(ADD, 1): 1})


def test_drunk_contents_match_walked_path():
    for n in range(1, 8):
        for lp in enumerate_lambda(n):
            closed = drunk_contents(n, lp.shape)
            walked = Counter(content_sequence(drunk_path(n, lp.shape)))
            assert closed == walked


def test_drunk_contents_level_checked():
    with pytest.raises(ShapeLevelMismatch):
        drunk_contents(3, Partition((2,)))


def test_reduce_values_cancels_inverse_pairs():
    v = ContentValue("power", 1, 4)
    assert reduce_values([v, v.inverse()], "power").is_trivial
    # self-inverse values never contribute
    one = ContentValue("power", 1, 0)
    assert reduce_values([one, one], "power").is_trivial


def test_reduce_values_order_independent():
    rng = random.Random(3)
    vals = [ContentValue("power", 1, b) for b in (-4, -2, -2, 0, 2, 4, 4, 6)]
    base = reduce_values(vals, "power")
    for _ in range(10):
        shuffled = vals[:]
        rng.shuffle(shuffled)
        assert reduce_values(shuffled, "power") == base


def test_signature_antisymmetry():
    for n in range(1, 6):
        for r in (GENERIC, power_regime(1, 2), power_regime(-1, 3)):
            for lp in enumerate_lambda(n):
                sig = signature(n, lp.shape, r)
                for v, e in sig.exponents.items():
                    assert sig.exponents.get(v.inverse()) == -e


def test_signature_n2_t_one_table():
    # t = q^0: the three level-2 signatures are 1 and a reciprocal pair
    r = power_regime(1, 0)
    assert signature(2, EMPTY, r).is_trivial
    s2 = signature(2, Partition((2,)), r)
    s11 = signature(2, Partition((1, 1)), r)
    assert s2 == power_sig({-2: 1, 2: -1})
    assert s11 == power_sig({2: 1, -2: -1})
    assert str(s2) == "(1-q^-2T)/(1-q^2T)"


def test_signature_collision_t_qinv_n2():
    r = power_regime(1, -1)
    assert signature_equal(signature(2, EMPTY, r), signature(2, Partition((2,)), r))
    assert not signature_equal(signature(2, EMPTY, r),
                               signature(2, Partition((1, 1)), r))


def test_signature_equal_checks_kind():
    a = signature(2, Partition((2,)), GENERIC)
    b = signature(2, Partition((2,)), power_regime(1, 2))
    with pytest.raises(RegimeMismatch):
        signature_equal(a, b)


def test_merge_checks_kind():
    a = signature(2, Partition((2,)), GENERIC)
    b = signature(2, Partition((2,)), power_regime(1, 2))
    with pytest.raises(RegimeMismatch):
        a.merge(b)


def test_skew_signature_trivial_cases():
    # (4,2,2)/(4) at t=q^2 and (4,2,2)/(4,1,1) at t=q are both trivial
    lam = Partition((4, 2, 2))
    assert skew_signature(lam, Partition((4,)), power_regime(1, 2)).is_trivial
    assert skew_signature(lam, Partition((4, 1, 1)), power_regime(1, 1)).is_trivial
    # generically the same skew shapes are visible
    assert not skew_signature(lam, Partition((4,)), GENERIC).is_trivial


def test_multiplicativity():
    pairs = [(Partition((4, 2, 2)), Partition((4,))),
             (Partition((4, 2, 2)), Partition((4, 1, 1))),
             (Partition((3, 3, 1)), Partition((2, 1))),
             (Partition((5, 2)), Partition((3,)))]
    regimes = [GENERIC, power_regime(1, 2), power_regime(-1, 4),
               power_regime(1, -2)]
    for lam, mu in pairs:
        for r in regimes:
            assert multiplicativity_check(lam, mu, r)


def test_pairing_needs_even_power():
    with pytest.raises(RegimeMismatch):
        pairing_set(2, Partition((2,)), GENERIC)
    with pytest.raises(RegimeMismatch):
        pairing_set(2, Partition((2,)), power_regime(1, 1))


def test_pairing_n4_tq2():
    # t = q^2: diagonals i, j pair when i + j = -2; -1 is self-paired
    r = power_regime(1, 2)
    assert pairing_set(4, Partition((4,)), r).paired == frozenset()
    p = pairing_set(4, Partition((1, 1, 1, 1)), r)
    assert p.paired == frozenset({0, -1, -2})
    assert p.mates[-1] == (-1,)
    assert p.mates[0] == (-2,) and p.mates[-2] == (0,)
    assert pairing_set(4, Partition((2, 2)), r).paired == frozenset({-1})


def test_pairing_multiplicities_in_high_even_regimes():
    # distinct paired diagonals carry multiplicity one when 2a >= n - 2
    for n in range(2, 7):
        for a in range((n - 1) // 2, n):
            r = power_regime(1, 2 * a)
            for lp in enumerate_lambda(n):
                dd = diagonal_datum(lp.shape)
                pairs = pairing_set(n, lp.shape, r)
                for i in pairs:
                    for j in pairs.mates[i]:
                        if j != i:
                            assert dd.multiplicity(i) == 1
                            assert dd.multiplicity(j) == 1


def test_series_consistency():
    assert series_consistency(5, Partition((2, 1)), GENERIC, 3)
    assert series_consistency(4, Partition((2,)), power_regime(1, 2), 4)


def test_signature_json_is_sorted():
    sig = signature(4, Partition((2,)), power_regime(1, 2))
    data = signature_json(sig)
    assert data == [{"value": "q^-4", "exponent": 1},
                    {"value": "q^-2", "exponent": 1},
                    {"value": "q^2", "exponent": -1},
                    {"value": "q^4", "exponent": -1}]


def test_signature_str_trivial():
    assert str(signature(2, EMPTY, power_regime(1, 0))) == "1"
