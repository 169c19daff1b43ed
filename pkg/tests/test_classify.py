import pytest

from lefschetz.classify import (
    SOCLE_WIDTH,
    ForcingVerdict,
    expected_quotient_hf,
    forces_slp_mrp,
    forces_wlp,
    lower_neighbour,
)
from lefschetz.errors import NotAnOSequence
from lefschetz.macaulay import enumerate_o_sequences, t_index


def test_forces_wlp_examples():
    assert forces_wlp([1, 3, 4, 3]) == ForcingVerdict(True)
    assert forces_wlp([1, 3, 3]) == ForcingVerdict(False, 2)
    assert forces_wlp([1]).forces


def test_forces_slp_mrp_examples():
    assert forces_slp_mrp([1, 2, 3, 2, 1]).forces
    assert forces_slp_mrp([1, 3, 4, 3]) == ForcingVerdict(False, SOCLE_WIDTH)
    assert forces_slp_mrp([1, 3, 2, 2, 1]).forces
    assert forces_slp_mrp([1, 1, 1]).forces


def test_wlp_failure_reported_before_socle_width():
    # fails the i-condition at i = 2 and also has h_t = 3
    assert forces_slp_mrp([1, 3, 3]).failing_index == 2


@pytest.mark.parametrize("fn", [forces_wlp, forces_slp_mrp])
def test_rejects_non_o_sequences(fn):
    with pytest.raises(NotAnOSequence):
        fn([1, 2, 4])


def test_verdict_invariant():
    with pytest.raises(ValueError):
        ForcingVerdict(True, 3)
    with pytest.raises(ValueError):
        ForcingVerdict(False)


def test_lower_neighbour_matches_examples():
    assert lower_neighbour(3, 1) == 1
    assert lower_neighbour(4, 2) == 3
    assert lower_neighbour(3, 2) == 2


def test_expected_quotient_hf():
    assert expected_quotient_hf([1, 3, 4, 3], 1) == (1, 2, 1, 0)
    assert expected_quotient_hf([1, 2, 3, 2, 1], 2) == (1, 2, 2, 0, 0)
    assert expected_quotient_hf([1, 3, 4, 3], 4) == (1, 3, 4, 3)
    with pytest.raises(ValueError):
        expected_quotient_hf([1, 2], 0)


def test_classes_nested_and_strict():
    separated = False
    for H in enumerate_o_sequences(4, 6, 12):
        strong = forces_slp_mrp(H).forces
        weak = forces_wlp(H).forces
        assert not strong or weak, H
        separated |= weak and not strong
        if H.r <= 2:
            assert strong, H
    assert separated


def test_forcing_wlp_grows_through_t():
    for H in enumerate_o_sequences(4, 6, 15):
        if forces_wlp(H).forces:
            t = t_index(H)
            assert all(H[i] < H[i + 1] for i in range(t - 1)), H
