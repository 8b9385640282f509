import pytest

from nzcod.construction import nzcod_design, scod_design
from nzcod.corpus import DESIGN_NAMES, _read, load_design
from nzcod.dyadic import ComplexCoefficient, DyadicRootTwo
from nzcod.forms import EntryForm
from nzcod.notation import (
    NotationError,
    format_entry,
    format_grid,
    parse_constant,
    parse_design,
    parse_matrix,
    print_design,
)


class TestParsing:
    def test_alamouti(self):
        d = parse_matrix("x1 -x2*\nx2 x1*", n=2, k=2)
        assert d == scod_design(1)

    def test_standalone_scale_prefix_word(self):
        d = parse_matrix("s x5", n=1, k=5)
        inv_sqrt2 = ComplexCoefficient.real(DyadicRootTwo(0, 1, 1))
        assert d.entry(0, 0) == EntryForm.variable(5).scaled(inv_sqrt2)

    def test_glued_scale_prefix(self):
        assert parse_matrix("sx5", n=1, k=5) == parse_matrix("s x5", n=1, k=5)

    def test_conjugated_interleaved(self):
        d = parse_matrix("x{1,2}*", n=1, k=2)
        assert d.entry(0, 0) == EntryForm.interleaved(1, 2, conj=True)

    def test_slash_two_suffix(self):
        half = ComplexCoefficient.real(DyadicRootTwo(1, 0, 1))
        d = parse_matrix("x5/2", n=1, k=5)
        assert d.entry(0, 0) == EntryForm.variable(5).scaled(half)

    def test_combination_expands_to_interleaved(self):
        # one of the rewrite identities: (-s1-s1*+s2-s2*)/2 = -conj(s_{1,2})
        d = parse_matrix("(-s1-s1*+s2-s2*)/2", n=1, k=2)
        assert d.entry(0, 0) == -EntryForm.interleaved(1, 2, conj=True)

    def test_j_prefix(self):
        d = parse_matrix("jx1", n=1, k=1)
        assert d.entry(0, 0) == EntryForm.variable(1).scaled(
            ComplexCoefficient.from_ints(0, 1))

    def test_global_scale_header(self):
        plain = parse_design("1 1 1\nsx1")
        scaled = parse_design("1 1 s\nx1")
        assert plain == scaled

    def test_wrong_entry_count(self):
        with pytest.raises(NotationError, match="expected 2 entries, found 3"):
            parse_matrix("x1 x2 x1\nx2 x1", n=2, k=2)

    def test_wrong_row_count(self):
        with pytest.raises(NotationError, match="matrix rows"):
            parse_design("2 2 1\nx1 x2")

    def test_bad_token_is_position_annotated(self):
        with pytest.raises(NotationError, match=r"row 2, entry 2"):
            parse_matrix("x1 x2\nx1 x!", n=2, k=2)

    def test_decorated_zero_rejected(self):
        with pytest.raises(NotationError):
            parse_matrix("-0 x1", n=2, k=1)

    def test_zero_based_variable_rejected(self):
        with pytest.raises(NotationError, match="1-based"):
            parse_matrix("x0", n=1, k=2)
        with pytest.raises(NotationError, match="1-based"):
            parse_matrix("x{0,1}", n=1, k=2)

    def test_variable_beyond_count_is_position_annotated(self):
        with pytest.raises(NotationError, match=r"row 1, entry 1"):
            parse_matrix("x9", n=1, k=2)


class TestPrinting:
    @pytest.mark.parametrize("name", DESIGN_NAMES)
    def test_round_trip_corpus(self, name):
        d = load_design(name)
        assert parse_design(print_design(d)) == d

    @pytest.mark.parametrize("a", [1, 2, 3, 4])
    def test_round_trip_constructed(self, a):
        for d in (scod_design(a), nzcod_design(a)):
            assert parse_design(print_design(d)) == d

    def test_format_entry_tokens(self):
        assert format_entry(EntryForm.zero()) == "0"
        assert format_entry(-EntryForm.variable(2, conj=True)) == "-x2*"
        s = ComplexCoefficient.real(DyadicRootTwo(0, 1, 1))
        assert format_entry(EntryForm.interleaved(1, 2).scaled(s)) == "sx{1,2}"

    def test_general_entries_print_as_combinations(self):
        d = load_design("wygt")
        token = format_entry(d.entries[0][0])
        assert token.startswith("(") and "x1" in token and "x2" in token

    def test_no_zero_token_in_nzcod_grid(self):
        grid = format_grid(nzcod_design(5))
        tokens = set(grid.split())
        assert "0" not in tokens


class TestConstantParsing:
    def test_small_matrix(self):
        m = parse_constant("2 2 s\nr2 0\n1 -1")
        assert m.entry(0, 0) == ComplexCoefficient.real(DyadicRootTwo(1))
        assert m.entry(1, 0) == ComplexCoefficient.real(DyadicRootTwo(0, 1, 1))
        assert m.entry(0, 1).is_zero

    def test_bad_token(self):
        with pytest.raises(NotationError):
            parse_constant("1 1 1\nq")


def test_comments_and_blank_lines_ignored():
    text = _read("g3.design")
    assert "#" in text
    assert parse_design(text) == load_design("g3")
