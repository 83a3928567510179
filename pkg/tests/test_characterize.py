import pytest
from hypothesis import given
from hypothesis import strategies as st

from trominoes.board import DeficientBoard, Rect, SymmetryOp, apply_symmetry, map_cell
from trominoes.characterize import (
    BadPair,
    BadShape,
    UnsupportedShape,
    bad_pairs_2xN,
    bad_pairs_4x5,
    bad_pairs_4xN,
    bad_pairs_5x7,
    bad_pairs_5xN,
    bad_pairs_7or10xN,
    bad_pairs_for,
    bad_pairs_general,
    decide,
    direc_tileable,
)
from trominoes.solver import is_tileable
from trominoes.tables import R4X5_NAMED
from trominoes.verify import oracle_bad_pairs, oracle_disagreements

from .strategies import domino_boards


def P(a, b):
    return BadPair.of(a, b)


def cellsets(pairs):
    return {p.cells for p in pairs}


class TestTwoRows:
    def test_vertical_domino_in_first_column_is_fine(self):
        assert direc_tileable(4, ((1, 1), (2, 1)))

    def test_vertical_domino_in_second_column_is_bad(self):
        assert not direc_tileable(4, ((1, 2), (2, 2)))
        assert P((1, 2), (2, 2)) in bad_pairs_2xN(4)

    def test_horizontal_domino_starting_in_second_column_is_fine(self):
        assert direc_tileable(4, ((1, 2), (1, 3)))

    def test_bad_shape(self):
        with pytest.raises(BadShape):
            bad_pairs_2xN(5)


class TestFourRows:
    def test_named_pairs_present(self):
        s = bad_pairs_4xN(8)
        assert P((2, 3), (3, 3)) in s and P((2, 6), (3, 6)) in s

    def test_fourteen_pairs(self):
        assert len(bad_pairs_4xN(8)) == 14
        assert len(bad_pairs_4xN(11)) == 14

    def test_instantiated_family_member(self):
        s = bad_pairs_4xN(11)
        assert P((2, 10), (2, 11)) in s and P((2, 8), (2, 9)) in s
        assert P((2, 9), (2, 10)) not in s

    def test_four_by_five_contains_named_pairs(self):
        s = bad_pairs_4x5()
        assert P((2, 3), (3, 3)) in s
        assert {P(a, b) for a, b in R4X5_NAMED} <= s

    def test_four_by_five_corner_is_fine(self):
        assert P((1, 1), (1, 2)) not in bad_pairs_4x5()

    def test_four_by_five_matches_search(self):
        # the text names 7 pairs; exhaustive search finds 15 and the table follows the search
        assert len(R4X5_NAMED) == 7
        assert cellsets(bad_pairs_4x5()) == oracle_bad_pairs(4, 5)


class TestFiveRows:
    def test_five_by_seven_extra_pair(self):
        assert P((3, 2), (3, 3)) in bad_pairs_5x7()

    def test_five_by_seven_parity_rule(self):
        # both cells in an even row
        assert P((2, 2), (2, 3)) in bad_pairs_5x7()
        assert not is_tileable(DeficientBoard.of(5, 7, [(2, 2), (2, 3)]))

    def test_corner_pair_not_bad(self):
        assert P((1, 1), (2, 1)) not in bad_pairs_5x7()

    def test_five_by_seven_matches_search(self):
        assert cellsets(bad_pairs_5x7()) == oracle_bad_pairs(5, 7)

    def test_five_by_ten(self):
        s = bad_pairs_5xN(10)
        assert P((3, 2), (3, 3)) in s and P((3, 8), (3, 9)) in s
        assert len(s) == 18

    def test_five_by_thirteen_family_member(self):
        s = bad_pairs_5xN(13)
        assert P((2, 10), (2, 11)) in s and P((2, 12), (2, 13)) in s
        assert P((2, 11), (2, 12)) not in s


class TestLargeRectangles:
    def test_seven_by_eight(self):
        s = bad_pairs_7or10xN(7, 8)
        assert P((4, 2), (5, 2)) in s and len(s) == 16

    def test_ten_by_eight_matches_search(self):
        assert cellsets(bad_pairs_7or10xN(10, 8)) == oracle_bad_pairs(10, 8)

    def test_general_contains_far_corner(self):
        assert P((6, 7), (6, 8)) in bad_pairs_general(7, 8)

    def test_thirteen_by_eleven_near_corners(self):
        s = bad_pairs_general(13, 11)
        assert len(s) == 16
        for p in s:
            for r, c in p.cells:
                assert min(r - 1, 13 - r) < 4 and min(c - 1, 11 - c) < 4

    @pytest.mark.parametrize("m,n", [(7, 8), (7, 11), (10, 8), (10, 11)])
    def test_two_lists_agree(self, m, n):
        assert bad_pairs_general(m, n) == bad_pairs_7or10xN(m, n)

    def test_general_is_closed_under_rectangle_symmetries(self):
        m, n = 13, 14
        s = bad_pairs_general(m, n)
        for op in (SymmetryOp.FLIP_H, SymmetryOp.FLIP_V, SymmetryOp.ROT_180):
            assert {P(*(map_cell(c, m, n, op) for c in p.cells)) for p in s} == s


class TestDecide:
    def test_listed_pair_is_bad(self):
        v = decide(DeficientBoard.of(7, 8, [(2, 1), (2, 2)]))
        assert not v.tileable and v.reason == "BAD_PAIR"

    def test_interior_pair_is_fine(self):
        assert decide(DeficientBoard.of(7, 8, [(4, 4), (4, 5)])).tileable

    def test_two_row_bad(self):
        assert not decide(DeficientBoard.of(2, 4, [(1, 2), (2, 2)])).tileable

    def test_empty_board(self):
        assert decide(DeficientBoard.of(1, 2, [(1, 1), (1, 2)])).tileable

    def test_area(self):
        v = decide(DeficientBoard.of(4, 4, [(1, 1), (1, 2)]))
        assert v.reason == "AREA"

    def test_full_rectangles(self):
        assert decide(DeficientBoard.of(2, 3)).tileable
        assert decide(DeficientBoard.of(3, 3)).reason == "AREA" or not decide(DeficientBoard.of(3, 3)).tileable
        assert decide(DeficientBoard.of(3, 5)).reason == "NO_FIT"

    def test_single_missing_cell(self):
        assert decide(DeficientBoard.of(4, 4, [(2, 3)])).tileable
        with pytest.raises(UnsupportedShape):
            decide(DeficientBoard.of(5, 5, [(2, 2)]))

    def test_unsupported_separated_pair(self):
        with pytest.raises(UnsupportedShape):
            decide(DeficientBoard.of(7, 8, [(1, 1), (5, 5)]))

    def test_separated_pair_on_four_columns(self):
        b = DeficientBoard.of(8, 4, [(1, 1), (8, 4)])
        assert decide(b).tileable == is_tileable(b)

    @pytest.mark.parametrize(
        "m,n", [(2, 4), (2, 7), (4, 2), (1, 5), (4, 5), (5, 4), (4, 8), (8, 4), (5, 7), (7, 5), (7, 8), (8, 7)]
    )
    def test_agrees_with_search_everywhere(self, m, n):
        assert oracle_disagreements(m, n) == []

    @given(domino_boards(max_side=9))
    def test_agrees_with_search_on_random_boards(self, b):
        assert decide(b).tileable == is_tileable(b)

    @given(domino_boards(min_side=2, max_side=14), st.sampled_from(list(SymmetryOp)))
    def test_verdict_invariant_under_symmetry(self, b, s):
        assert decide(b).tileable == decide(apply_symmetry(b, s)).tileable


class TestTables:
    def test_transpose_coherence(self):
        name, pairs = bad_pairs_for(8, 4)
        _, base = bad_pairs_for(4, 8)
        assert name == "QUADREC"
        assert {P(*(map_cell(c, 4, 8, SymmetryOp.TRANSPOSE) for c in p.cells)) for p in base} == pairs

    def test_frame_is_recorded(self):
        _, pairs = bad_pairs_for(8, 4)
        assert all(p.frame == Rect(8, 4) for p in pairs)

    def test_shape_error(self):
        with pytest.raises(BadShape):
            bad_pairs_for(4, 4)

    def test_pairs_are_unordered(self):
        assert P((1, 2), (1, 1)) == P((1, 1), (1, 2))
