"""Right-tromino tilings of rectangles with up to two missing cells."""

from .board import (
    BoardError,
    Cell,
    DeficientBoard,
    Kind,
    Placement,
    Rect,
    SymmetryOp,
    Tiling,
    apply_symmetry,
    covered_cells,
    hquad_shift,
    validate_tiling,
    vquad_shift,
)
from .characterize import BadPair, Verdict, decide
from .construct import Untileable, construct_tiling, solve_exact
from .counting import count_domino, count_tromino, count_tromino_plus_one_domino

__all__ = [
    "BadPair",
    "BoardError",
    "Cell",
    "DeficientBoard",
    "Kind",
    "Placement",
    "Rect",
    "SymmetryOp",
    "Tiling",
    "Untileable",
    "Verdict",
    "apply_symmetry",
    "construct_tiling",
    "count_domino",
    "count_tromino",
    "count_tromino_plus_one_domino",
    "covered_cells",
    "decide",
    "hquad_shift",
    "solve_exact",
    "validate_tiling",
    "vquad_shift",
]
