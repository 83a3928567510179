"""Re-derive the literal bad-pair tables by exhaustive search and print them.

The output is the Python source of ``src/trominoes/tables.py``'s tuples; diff
it against the committed file to confirm the tables are current.
"""

from itertools import combinations

from trominoes.board import Cell, DeficientBoard, adjacent
from trominoes.characterize import domino_positions
from trominoes.solver import is_tileable


def bad_dominoes(m, n):
    return sorted(
        (tuple(a), tuple(b)) for a, b in domino_positions(m, n) if not is_tileable(DeficientBoard.of(m, n, (a, b)))
    )


def bad_separated_pairs(m, n):
    cells = [Cell(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    out = []
    for a, b in combinations(cells, 2):
        board = DeficientBoard.of(m, n, (a, b))
        if not adjacent(a, b) and board.area_ok and not is_tileable(board):
            out.append((tuple(a), tuple(b)))
    return sorted(out)


def show(name, pairs):
    print(f"{name} = (")
    for a, b in pairs:
        print(f"    ({a}, {b}),")
    print(")")


def main() -> None:
    show("R4X5_BAD", bad_dominoes(4, 5))
    show("R8X4_NONADJACENT_BAD", bad_separated_pairs(8, 4))


if __name__ == "__main__":
    main()
