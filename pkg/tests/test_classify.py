from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cangeo.classify import (
    DEGREE1_PAIRS,
    OPEN_PAIRS,
    BlowupPair,
    DeformationClass,
    TriState,
    alpha_surjective,
    classify,
    deformation_class,
    ext1_nonzero,
    smooth_cover_exists,
    very_ample,
    zone_rule,
)

Y, N, U = TriState.YES, TriState.NO, TriState.UNKNOWN


def test_pair_validation():
    with pytest.raises(ValueError):
        BlowupPair(1, 1)
    with pytest.raises(ValueError):
        BlowupPair(3, 0)
    BlowupPair(2, 1)


# --- very ampleness -------------------------------------------------------

@pytest.mark.parametrize("d,s,want", [
    (2, 1, Y), (2, 2, N),
    (3, 6, Y), (3, 7, N),
    (4, 10, Y), (4, 11, N),
    (5, 15, Y), (5, 16, N),   # bound (25+15-10)/2 = 15
    (6, 22, Y), (6, 23, N),   # (36+18-10)/2 = 22
    (10, 60, Y), (10, 61, N),
])
def test_very_ample_boundaries(d, s, want):
    assert very_ample(BlowupPair(d, s)) is want


# --- smooth cover existence ----------------------------------------------

@pytest.mark.parametrize("d,s,want", [
    (2, 1, Y), (2, 2, N),
    (3, 6, Y), (3, 7, N),
    (4, 10, Y), (4, 11, N),
    (5, 14, Y), (5, 15, U), (5, 16, N),
    (6, 17, Y), (6, 18, U), (6, 19, N),
    (7, 21, Y), (7, 22, U), (7, 23, U), (7, 24, N),
    (11, 40, Y), (11, 41, U), (11, 43, U), (11, 44, N),
])
def test_smooth_cover_boundaries(d, s, want):
    assert smooth_cover_exists(BlowupPair(d, s)) is want


# --- alpha and ext1 -------------------------------------------------------

@pytest.mark.parametrize("d,s,want", [
    (2, 1, Y), (2, 2, N), (2, 5, N), (2, 6, Y),
    (3, 4, Y), (3, 5, N), (3, 9, N), (3, 10, Y),
    (4, 7, Y), (4, 8, N), (4, 14, N), (4, 15, Y),
    (5, 11, Y), (5, 12, U), (5, 13, N), (5, 20, N), (5, 21, Y),
    (6, 16, Y), (6, 17, U), (6, 18, N), (6, 27, N), (6, 28, Y),
    (7, 22, Y), (7, 23, U), (7, 24, U), (7, 25, N), (7, 35, N), (7, 36, Y),
])
def test_alpha_surjective_boundaries(d, s, want):
    assert alpha_surjective(BlowupPair(d, s)) is want


def test_ext1_mirrors_alpha_on_very_ample_pairs():
    # The Ext group is the cokernel of the multiplication map only where
    # the embedding exists, so the mirror property is asserted exactly
    # there.  Outside the very ample zone the two verdicts are unrelated
    # (for large s the map is surjective again while the Ext group stays
    # nonzero).
    for d in range(2, 40):
        for s in range(1, 3 * d * d):
            pair = BlowupPair(d, s)
            if very_ample(pair) is not Y:
                continue
            a, e = alpha_surjective(pair), ext1_nonzero(pair)
            assert (a is U) == (e is U), (d, s)
            if a is not U:
                assert (e is Y) == (a is N), (d, s)


def test_ext1_is_monotone_in_s():
    # adding base points can only create Ext classes, never destroy them
    order = {N: 0, U: 1, Y: 2}
    for d in range(2, 25):
        prev = 0
        for s in range(1, 2 * d * d):
            cur = order[ext1_nonzero(BlowupPair(d, s))]
            assert cur >= prev, (d, s)
            prev = cur


# --- deformation class ----------------------------------------------------

def test_degree1_list():
    assert DEGREE1_PAIRS == frozenset(
        {(3, 5), (3, 6), (4, 8), (4, 9), (4, 10), (5, 13), (5, 14)})
    for d, s in DEGREE1_PAIRS:
        assert deformation_class(BlowupPair(d, s)) is DeformationClass.DEGREE1


def test_open_pairs():
    assert OPEN_PAIRS == frozenset({(5, 12), (6, 17)})
    for d, s in OPEN_PAIRS:
        assert deformation_class(BlowupPair(d, s)) is DeformationClass.OPEN_QUESTION


@pytest.mark.parametrize("d,s,want", [
    (2, 1, DeformationClass.DEGREE2_ALWAYS),
    (3, 4, DeformationClass.DEGREE2_ALWAYS),
    (4, 7, DeformationClass.DEGREE2_ALWAYS),
    (5, 11, DeformationClass.DEGREE2_ALWAYS),
    (6, 16, DeformationClass.DEGREE2_ALWAYS),
    (7, 21, DeformationClass.DEGREE2_ALWAYS),
    (8, 25, DeformationClass.DEGREE2_ALWAYS),
    (2, 2, DeformationClass.NOT_APPLICABLE),
    (3, 7, DeformationClass.NOT_APPLICABLE),
    (5, 15, DeformationClass.NOT_APPLICABLE),   # cover existence open
    (6, 18, DeformationClass.NOT_APPLICABLE),
])
def test_deformation_class_samples(d, s, want):
    assert deformation_class(BlowupPair(d, s)) is want


def test_degree2_zone_boundary_large_d():
    # (2d^2+13d+21)/10 at d=9 is exactly 30
    assert deformation_class(BlowupPair(9, 30)) is DeformationClass.DEGREE2_ALWAYS
    assert deformation_class(BlowupPair(9, 31)) is not DeformationClass.DEGREE2_ALWAYS


@given(st.integers(2, 80), st.integers(1, 500))
def test_every_pair_lands_in_exactly_one_class(d, s):
    pair = BlowupPair(d, s)
    cls = deformation_class(pair)
    assert isinstance(cls, DeformationClass)
    if cls is not DeformationClass.NOT_APPLICABLE:
        assert smooth_cover_exists(pair) is Y
    else:
        assert smooth_cover_exists(pair) is not Y or (d, s) not in DEGREE1_PAIRS


@given(st.integers(2, 60), st.integers(1, 400))
def test_record_is_internally_consistent(d, s):
    rec = classify(BlowupPair(d, s))
    if rec.deformation is DeformationClass.DEGREE1:
        assert rec.ext1_nonzero is Y
        assert rec.smooth_cover is Y
    if rec.deformation is DeformationClass.DEGREE2_ALWAYS:
        assert rec.ext1_nonzero is N
        assert rec.smooth_cover is Y
    # a very ample system always gives a smooth cover candidate
    if rec.very_ample is Y and d <= 4:
        assert rec.smooth_cover is Y


def test_zone_rule_strings_are_distinct_and_nonempty():
    seen = {}
    for d, s in [(2, 1), (2, 2), (3, 5), (3, 4), (5, 12), (5, 15), (5, 16),
                 (7, 3), (9, 30)]:
        rule = zone_rule(BlowupPair(d, s))
        assert rule and isinstance(rule, str)
        seen[(d, s)] = rule
    assert seen[(3, 5)] == "listed degree-1 pair"
    assert seen[(5, 12)] == "open case"
    assert seen[(5, 15)] == "smooth cover existence open"
    assert seen[(2, 2)] == "not very ample"
    assert seen[(2, 1)] != seen[(3, 4)] != seen[(7, 3)]
    assert "21" in seen[(7, 3)]
