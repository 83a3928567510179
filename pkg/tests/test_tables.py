"""The literal tables must equal a fresh exhaustive search."""

from itertools import combinations

from trominoes.board import Cell, DeficientBoard, adjacent
from trominoes.characterize import domino_positions
from trominoes.solver import is_tileable
from trominoes.tables import R4X5_BAD, R4X5_NAMED, R8X4_NONADJACENT_BAD


def fresh_bad_dominoes(m, n):
    return sorted(
        (tuple(a), tuple(b)) for a, b in domino_positions(m, n) if not is_tileable(DeficientBoard.of(m, n, (a, b)))
    )


def fresh_bad_separated(m, n):
    cells = [Cell(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    out = []
    for a, b in combinations(cells, 2):
        board = DeficientBoard.of(m, n, (a, b))
        if not adjacent(a, b) and board.area_ok and not is_tileable(board):
            out.append((tuple(a), tuple(b)))
    return sorted(out)


def test_four_by_five_table_regenerates():
    assert list(R4X5_BAD) == fresh_bad_dominoes(4, 5)


def test_named_pairs_are_a_subset():
    assert set(R4X5_NAMED) <= set(R4X5_BAD)


def test_eight_by_four_table_regenerates():
    assert list(R8X4_NONADJACENT_BAD) == fresh_bad_separated(8, 4)


def test_eight_by_four_table_is_mirror_symmetric():
    flip = {tuple(sorted(((9 - a[0], a[1]), (9 - b[0], b[1])))) for a, b in R8X4_NONADJACENT_BAD}
    assert flip == set(R8X4_NONADJACENT_BAD)


def test_table_entries_sorted_and_separated():
    for a, b in R8X4_NONADJACENT_BAD:
        assert a < b and not adjacent(a, b)
