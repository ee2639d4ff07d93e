import math

import pytest
from hypothesis import given, strategies as st

from deltanet.core import (
    ContradictionError,
    DomainError,
    Interpretation,
    add_weights,
    deltan,
    odds_of,
    parse_interpretation,
    prob_of,
)


def test_odds_of_examples():
    assert odds_of(0.5) == 1.0
    assert odds_of(0.4) == pytest.approx(2.0 / 3.0, abs=1e-12)
    assert odds_of(1.0) == math.inf
    assert odds_of(0.0) == 0.0


def test_prob_of_examples():
    assert prob_of(1.0) == 0.5
    assert prob_of(3.0) == 0.75
    assert prob_of(0.0) == 0.0
    assert prob_of(math.inf) == 1.0


def test_prob_of_rejects_negative_odds():
    with pytest.raises(DomainError):
        prob_of(-0.1)


def test_odds_round_trip_exact_points():
    for p in (0.0, 0.5, 1.0):
        assert prob_of(odds_of(p)) == p


@given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_odds_round_trip(p):
    assert prob_of(odds_of(p)) == pytest.approx(p, abs=1e-12)


@given(
    st.floats(min_value=0.0, max_value=1.0, exclude_max=True),
    st.floats(min_value=0.0, max_value=1.0, exclude_max=True),
)
def test_odds_strictly_increasing(a, b):
    if a < b:
        assert odds_of(a) < odds_of(b)
    elif a > b:
        assert odds_of(a) > odds_of(b)


def test_add_weights_infinity_rules():
    assert add_weights(math.inf, 3.0) == math.inf
    assert add_weights(-math.inf, 3.0) == -math.inf
    assert add_weights(math.inf, math.inf) == math.inf
    with pytest.raises(ContradictionError):
        add_weights(math.inf, -math.inf)


def test_interpretation_validation():
    assert deltan(3).n == 3
    with pytest.raises(DomainError):
        deltan(2)
    with pytest.raises(DomainError):
        deltan(0)
    with pytest.raises(DomainError):
        Interpretation("delta1", n=3)
    with pytest.raises(DomainError):
        Interpretation("bogus")


def test_parse_interpretation():
    assert parse_interpretation("delta1").kind == "delta1"
    assert parse_interpretation("mycin").kind == "mycin-legacy"
    assert parse_interpretation("mycin-legacy").kind == "mycin-legacy"
    assert parse_interpretation("deltan:3") == deltan(3)
    assert parse_interpretation("deltan(99)") == deltan(99)
    assert parse_interpretation("orig").kind == "orig"
    with pytest.raises(DomainError):
        parse_interpretation("deltan:x")


def test_interpretation_flags():
    assert parse_interpretation("cf").is_probabilistic
    assert not parse_interpretation("orig").is_probabilistic
    assert not parse_interpretation("mycin").is_probabilistic
    assert str(deltan(3)) == "deltan(3)"
