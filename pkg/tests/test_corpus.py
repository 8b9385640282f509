import pytest

from nzcod.construction import nzcod_design, scod_design
from nzcod.corpus import (
    DESIGN_NAMES,
    load_constant,
    load_design,
    max_rate_numerator,
    product_code_16,
    verify_corpus,
)
from nzcod.design import classify_design


def reports_by_name():
    return {r.name: r for r in verify_corpus()}


def test_everything_passes():
    reports = verify_corpus()
    failing = [r.name for r in reports if not r.passed]
    assert not failing, failing


def test_gtwms_reported_suspect_not_silent():
    r = reports_by_name()["gtwms"]
    assert r.transcription_suspect
    assert any("suspect" in d for d in r.details)


def test_wygt_flagged_general_linear():
    cls = classify_design(load_design("wygt"))
    assert cls.has_general_linear
    assert cls.orthogonal


def test_r3_scaled_cod():
    cls = classify_design(load_design("r3"))
    assert cls.is_scaled_cod and not cls.is_cod and cls.zero_count == 0


def test_nze1_interleaves_three_pairs():
    cls = classify_design(load_design("nze1"))
    assert cls.interleaved_pairs == {frozenset((1, 2)), frozenset((1, 4)),
                                     frozenset((2, 4))}


def test_stored_product_code_matches_multiplication():
    assert load_design("nze16") == product_code_16()


def test_multipliers_are_unitary():
    assert load_constant("pre16").is_unitary()
    assert load_constant("post16").is_unitary()


def test_g3_file_matches_construction():
    assert load_design("g3") == scod_design(3)


def test_l2_file_matches_construction():
    # the display's forced orthogonal completion coincides with the
    # pipeline's 4-antenna design
    assert load_design("l2") == nzcod_design(2)


@pytest.mark.parametrize("name", DESIGN_NAMES)
def test_rate_bound(name):
    d = load_design(name)
    assert d.k <= max_rate_numerator(d.n)


def test_zero_counts_match_prose():
    expected = {"g3": 32, "gy": 0, "gtwms": 0, "wtjc": 0, "wygt": 0,
                "r3": 0, "l2": 0, "nze1": 0, "nze16": 0}
    for name, zeros in expected.items():
        assert load_design(name).zero_count() == zeros, name
