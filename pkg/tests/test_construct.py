import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trominoes.basecases import base_case_table, generate_base_cases, lookup_base_case
from trominoes.board import BoardError, DeficientBoard, Kind, Rect, validate_tiling
from trominoes.characterize import decide, domino_positions
from trominoes.construct import (
    Untileable,
    construct_tiling,
    decompose,
    dog_eared_board,
    tile_dog_eared,
    tile_full_rect,
    tile_Nx4_2deficient,
)
from trominoes.solver import CapExceeded, is_tileable, solve_exact
from trominoes.tables import R8X4_NONADJACENT_BAD

from .strategies import domino_boards


def covers_exactly(b, steps):
    cells = [c for s in steps for c in s.cells()]
    return len(cells) == len(set(cells)) == b.m * b.n


class TestFullRectangles:
    def test_three_by_two(self):
        t = tile_full_rect(Rect(3, 2))
        assert len(t.placements) == 2 and validate_tiling(t)

    def test_nine_by_five(self):
        t = tile_full_rect(Rect(9, 5))
        assert len(t.placements) == 15 and validate_tiling(t)

    def test_five_by_nine(self):
        assert validate_tiling(tile_full_rect(Rect(5, 9)))

    def test_three_by_odd(self):
        with pytest.raises(BoardError, match="UNTILEABLE_RECT"):
            tile_full_rect(Rect(3, 5))

    def test_every_tileable_rectangle_up_to_twenty(self):
        for m in range(1, 21):
            for n in range(1, 21):
                b = DeficientBoard.of(m, n)
                if decide(b).tileable:
                    assert validate_tiling(construct_tiling(b)), (m, n)


class TestDogEared:
    def test_four_by_five(self):
        t = tile_dog_eared(4, 5, "TR")
        assert len(t.placements) == 6 and validate_tiling(t)

    @pytest.mark.parametrize("corner", ["TL", "TR", "BL", "BR"])
    @pytest.mark.parametrize("orientation", ["H", "V"])
    @pytest.mark.parametrize("m,n", [(4, 5), (7, 8), (10, 11), (5, 13), (14, 10)])
    def test_all_corners(self, m, n, corner, orientation):
        t = tile_dog_eared(m, n, corner, orientation)
        assert validate_tiling(t) and t.board == dog_eared_board(m, n, corner, orientation)

    def test_seven_by_eleven_splits_off_a_full_block(self):
        b = dog_eared_board(7, 11, "TR", "H")
        steps = decompose(b)
        base = [s for s in steps if s.rule == "BASE_CASE"]
        assert len(base) == 1 and (base[0].rect.rows, base[0].rect.cols) == (7, 5)
        full = [c for s in steps if s.rule != "BASE_CASE" for c in s.cells()]
        assert set(full) == {(r, c) for r in range(1, 8) for c in range(1, 7)}

    def test_ten_by_eleven_uses_a_four_by_five_corner(self):
        steps = decompose(dog_eared_board(10, 11, "TR", "H"))
        base = [s for s in steps if s.rule == "BASE_CASE"]
        assert [(s.rect.rows, s.rect.cols) for s in base] == [(4, 5)]
        assert covers_exactly(DeficientBoard.of(10, 11), steps)

    def test_bad_shape(self):
        with pytest.raises(BoardError):
            tile_dog_eared(4, 4)


class TestConstruct:
    def test_bad_pair_on_a_large_board_has_no_tiling(self):
        # the pair is listed as bad for every large rectangle, and the search agrees
        b = DeficientBoard.of(13, 11, [(2, 1), (2, 2)])
        with pytest.raises(Untileable) as e:
            construct_tiling(b)
        assert e.value.verdict.reason == "BAD_PAIR"
        assert solve_exact(b) is None

    def test_thirteen_by_eleven_interior_pair(self):
        b = DeficientBoard.of(13, 11, [(8, 1), (8, 2)])
        assert validate_tiling(construct_tiling(b))

    def test_join_repair_on_four_rows(self):
        b = DeficientBoard.of(4, 14, [(2, 6), (3, 6)])
        steps = decompose(b)
        assert steps[0].rule == "JOIN_REPAIR"
        assert (steps[0].rect.rows, steps[0].rect.cols) == (4, 11)
        assert validate_tiling(construct_tiling(b))

    def test_hundred_by_hundred_and_four(self):
        b = DeficientBoard.of(100, 104, [(50, 50), (50, 51)])
        t = construct_tiling(b)
        assert validate_tiling(t)
        assert len(t.placements) == (100 * 104 - 2) // 3
        assert all(p.kind.is_tromino for p in t.placements)

    def test_untileable_carries_verdict(self):
        with pytest.raises(Untileable) as e:
            construct_tiling(DeficientBoard.of(2, 4, [(1, 2), (2, 2)]))
        assert not e.value.verdict.tileable

    def test_area_failure(self):
        with pytest.raises(Untileable) as e:
            construct_tiling(DeficientBoard.of(4, 4))
        assert e.value.verdict.reason == "AREA"

    def test_empty_board(self):
        t = construct_tiling(DeficientBoard.of(1, 2, [(1, 1), (1, 2)]))
        assert t.placements == () and validate_tiling(t)

    def test_unsupported_shape_falls_back_to_search(self):
        b = DeficientBoard.of(5, 5, [(1, 1)])
        assert validate_tiling(construct_tiling(b))

    def test_unsupported_shape_beyond_search_cap(self):
        with pytest.raises(CapExceeded):
            construct_tiling(DeficientBoard.of(19, 20, [(1, 1), (10, 10)]))

    def test_every_domino_position_up_to_eleven(self):
        for m in range(1, 12):
            for n in range(1, 12):
                if (m * n - 2) % 3:
                    continue
                for d in domino_positions(m, n):
                    b = DeficientBoard.of(m, n, d)
                    if is_tileable(b):
                        t = construct_tiling(b)
                        assert validate_tiling(t), str(b)
                    else:
                        with pytest.raises(Untileable):
                            construct_tiling(b)

    @given(domino_boards(min_side=1, max_side=40))
    def test_sound_on_random_boards(self, b):
        if decide(b).tileable:
            assert validate_tiling(construct_tiling(b))

    @settings(max_examples=20)
    @given(domino_boards(min_side=4, max_side=30))
    def test_deterministic(self, b):
        if decide(b).tileable:
            assert construct_tiling(b) == construct_tiling(b)

    @given(domino_boards(min_side=1, max_side=30))
    def test_decomposition_partitions_the_board(self, b):
        if decide(b).tileable:
            assert covers_exactly(b, decompose(b))


class TestFourColumns:
    def test_far_apart_cells_use_two_small_windows(self):
        b = DeficientBoard.of(11, 4, [(1, 1), (9, 4)])
        steps = decompose(b)
        windows = [s for s in steps if s.rule == "BASE_CASE"]
        assert [(s.rect.rows, s.rect.cols) for s in windows] == [(4, 4), (4, 4)]
        assert validate_tiling(tile_Nx4_2deficient(b))

    def test_bad_pair_has_no_tiling(self):
        a, c = R8X4_NONADJACENT_BAD[0]
        with pytest.raises(Untileable):
            tile_Nx4_2deficient(DeficientBoard.of(8, 4, [a, c]))

    @pytest.mark.parametrize("pair", R8X4_NONADJACENT_BAD[:16])
    def test_bad_pair_moved_down_three_rows_is_tileable(self, pair):
        b = DeficientBoard.of(11, 4, [(r + 3, c) for r, c in pair])
        if is_tileable(b):
            assert validate_tiling(tile_Nx4_2deficient(b))
        else:
            with pytest.raises(Untileable):
                tile_Nx4_2deficient(b)

    def test_transposed_board(self):
        b = DeficientBoard.of(4, 11, [(1, 1), (4, 9)])
        assert validate_tiling(tile_Nx4_2deficient(b))

    def test_every_pair_on_fourteen_rows(self):
        from itertools import combinations

        cells = [(r, c) for r in range(1, 15) for c in range(1, 5)]
        for a, c in combinations(cells, 2):
            b = DeficientBoard.of(14, 4, [a, c])
            if decide(b).tileable:
                assert validate_tiling(construct_tiling(b)), str(b)


class TestBaseCases:
    def test_table_regenerates_from_search(self):
        assert generate_base_cases() == base_case_table()

    def test_every_entry_validates(self):
        for e in base_case_table():
            assert validate_tiling(e.tiling), str(e.board)
            assert e.tiling.board == e.board

    def test_lookup_handles_transposes(self):
        b = DeficientBoard.of(5, 4, [(1, 1), (1, 2)])
        t = lookup_base_case(b)
        assert t is not None and validate_tiling(t) and t.board == b

    def test_lookup_miss(self):
        assert lookup_base_case(DeficientBoard.of(30, 30, [(1, 1), (1, 2)])) is None

    def test_entries_use_only_trominoes(self):
        for e in base_case_table():
            assert all(p.kind.is_tromino for p in e.tiling.placements)
            assert Kind.MONOMINO not in {p.kind for p in e.tiling.placements}
