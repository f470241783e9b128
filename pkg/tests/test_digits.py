from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quartercantor.digits import (
    DigitSystem,
    additive,
    canonical,
    contains,
    enumerate_level,
    invariance_check,
    orthogonality_check,
    scaled,
)
from quartercantor.numerics import FrequencyOverflowError, is_zero_of_muhat

odd = st.integers(0, 40).map(lambda k: 2 * k + 1)


def brute(digit_sets):
    """Enumerate digit strings directly."""
    return sorted(sum(d * 4**i for i, d in enumerate(ds)) for ds in product(*digit_sets))


def elems(ds, m):
    return enumerate_level(ds, m).elements.tolist()


def test_canonical_levels():
    assert elems(canonical(), 0) == [0]
    assert elems(canonical(), 1) == [0, 1]
    assert elems(canonical(), 2) == [0, 1, 4, 5]
    assert elems(canonical(), 3) == [0, 1, 4, 5, 16, 17, 20, 21]
    assert len(enumerate_level(canonical(), 7)) == 128


def test_scaled_and_additive_levels():
    assert elems(scaled(5), 2) == [0, 5, 20, 25]
    assert elems(scaled(3), 2) == [0, 3, 12, 15]
    assert elems(additive(3), 2) == [0, 3, 4, 7]
    assert elems(additive(5), 2) == [0, 4, 5, 9]
    assert elems(additive(7), 1) == [0, 7]


@pytest.mark.parametrize("m", range(0, 8))
def test_p_equal_one_is_canonical(m):
    assert enumerate_level(scaled(1), m) == enumerate_level(canonical(), m)
    assert enumerate_level(additive(1), m) == enumerate_level(canonical(), m)


@pytest.mark.parametrize("p", [3, 5, 7, 15])
@pytest.mark.parametrize("m", [1, 3, 6])
def test_levels_match_brute_force(p, m):
    assert elems(canonical(), m) == brute([(0, 1)] * m)
    assert elems(scaled(p), m) == [p * g for g in brute([(0, 1)] * m)]
    expected = sorted({4 * g for g in brute([(0, 1)] * (m - 1))} | {4 * g + p for g in brute([(0, 1)] * (m - 1))})
    assert elems(additive(p), m) == expected


@pytest.mark.parametrize("bad", [0, 2, -3, 4])
def test_p_must_be_odd_positive(bad):
    with pytest.raises(ValueError):
        scaled(bad)
    with pytest.raises(ValueError):
        additive(bad)


@pytest.mark.parametrize(
    "position, tail",
    [((), (1, 2)), ((), (0, 4)), ((), (0, 1, 2)), (((0, -1),), (0, 1))],
)
def test_digit_system_invariants(position, tail):
    with pytest.raises(ValueError):
        DigitSystem(position, tail)


def test_level_cap():
    with pytest.raises(ValueError):
        enumerate_level(canonical(), 15)


def test_frequency_cap_in_enumeration():
    with pytest.raises(FrequencyOverflowError):
        enumerate_level(scaled(4**23 + 1), 14)


def test_contains_examples():
    assert contains(canonical(), 21)
    assert not contains(canonical(), 2)
    assert contains(additive(3), 7)
    assert not contains(canonical(), -1)
    assert not contains(scaled(3), -1)
    assert 20 in canonical()


@given(odd, st.integers(-200, 4**7 - 1))
def test_contains_agrees_with_enumeration(p, n):
    # below 4**7 every member of these systems already appears at level 7
    for ds in (canonical(), scaled(p), additive(p)):
        assert contains(ds, n) == (n in enumerate_level(ds, 7))


@given(odd, st.integers(0, 9))
def test_contains_every_enumerated_element(p, m):
    for ds in (canonical(), scaled(p), additive(p)):
        assert all(contains(ds, n) for n in elems(ds, m))


def test_contains_matches_enumeration_exhaustively():
    ds = additive(5)
    members = set(elems(ds, 6))
    # every member of a higher level exceeds 4**5 except those already listed
    for n in range(-50, 4**5):
        assert contains(ds, n) == (n in members)


@given(odd, st.integers(0, 10))
def test_levels_are_nested(p, m):
    for ds in (canonical(), scaled(p), additive(p)):
        assert set(elems(ds, m)) <= set(elems(ds, m + 1))


@pytest.mark.parametrize("m", [1, 2, 7, 10])
def test_invariance(m):
    assert invariance_check(m).passed


def test_level_set_json():
    assert enumerate_level(canonical(), 2).to_json() == "[0, 1, 4, 5]"


@given(odd, st.integers(2, 6))
def test_pairwise_orthogonality(p, m):
    for ds in (scaled(p), additive(p)):
        xs = elems(ds, m)
        for i, a in enumerate(xs):
            for b in xs[i + 1:]:
                assert is_zero_of_muhat(a - b)


def test_orthogonality_check_reports_counterexample():
    bad = DigitSystem(((0, 2 + 4),), (0, 1), name="bad")  # 6 = 2 mod 4: even first digit
    report = orthogonality_check(enumerate_level(bad, 2))
    assert not report.passed
    a, b = report.counterexample
    assert not is_zero_of_muhat(b - a)
