"""Boards, placements, symmetries and tiling validation.

Coordinates are 1-indexed ``(row, col)`` from the top-left corner.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple


class Cell(NamedTuple):
    row: int
    col: int


class BoardError(ValueError):
    """Raised for malformed boards and illegal board operations."""


@dataclass(frozen=True)
class Rect:
    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise BoardError(f"rectangle must be at least 1x1, got {self.rows}x{self.cols}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    def contains(self, cell: tuple[int, int]) -> bool:
        return 1 <= cell[0] <= self.rows and 1 <= cell[1] <= self.cols


def adjacent(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


@dataclass(frozen=True)
class DeficientBoard:
    """A rectangle with zero, one or two missing cells."""

    rect: Rect
    missing: frozenset[Cell] = frozenset()

    def __post_init__(self) -> None:
        cells = frozenset(Cell(*c) for c in self.missing)
        object.__setattr__(self, "missing", cells)
        if len(cells) > 2:
            raise BoardError(f"at most two missing cells are supported, got {len(cells)}")
        for c in cells:
            if not self.rect.contains(c):
                raise BoardError(f"missing cell {tuple(c)} lies outside {self.m}x{self.n}")

    @classmethod
    def of(cls, m: int, n: int, missing: Iterable[tuple[int, int]] = ()) -> DeficientBoard:
        cells = [Cell(*c) for c in missing]
        if len(set(cells)) != len(cells):
            raise BoardError("missing cells must be distinct")
        return cls(Rect(m, n), frozenset(cells))

    @property
    def m(self) -> int:
        return self.rect.rows

    @property
    def n(self) -> int:
        return self.rect.cols

    @property
    def area(self) -> int:
        return self.m * self.n - len(self.missing)

    @property
    def area_ok(self) -> bool:
        return self.area % 3 == 0

    @property
    def is_domino_deficient(self) -> bool:
        if len(self.missing) != 2:
            return False
        a, b = self.missing
        return adjacent(a, b)

    def sorted_missing(self) -> list[Cell]:
        return sorted(self.missing)

    def cells(self) -> list[Cell]:
        """Cells to be covered, row-major."""
        return [
            Cell(r, c)
            for r in range(1, self.m + 1)
            for c in range(1, self.n + 1)
            if (r, c) not in self.missing
        ]

    def to_dict(self) -> dict:
        return {"rows": self.m, "cols": self.n, "missing": [list(c) for c in self.sorted_missing()]}

    @classmethod
    def from_dict(cls, d: dict) -> DeficientBoard:
        return cls.of(int(d["rows"]), int(d["cols"]), [tuple(c) for c in d.get("missing", [])])

    def __str__(self) -> str:
        miss = ",".join(f"({r},{c})" for r, c in self.sorted_missing())
        return f"R({self.m},{self.n})" + (f" minus {miss}" if miss else "")


class Kind(str, Enum):
    # trominoes are named by the corner of their 2x2 box that is NOT covered
    TROMINO_NE = "TROMINO_NE"
    TROMINO_NW = "TROMINO_NW"
    TROMINO_SE = "TROMINO_SE"
    TROMINO_SW = "TROMINO_SW"
    DOMINO_H = "DOMINO_H"
    DOMINO_V = "DOMINO_V"
    MONOMINO = "MONOMINO"

    @property
    def is_tromino(self) -> bool:
        return self.value.startswith("TROMINO")

    @property
    def is_domino(self) -> bool:
        return self.value.startswith("DOMINO")


# offsets of the covered cells relative to the anchor
SHAPES: dict[Kind, tuple[tuple[int, int], ...]] = {
    Kind.TROMINO_NE: ((0, 0), (1, 0), (1, 1)),
    Kind.TROMINO_NW: ((0, 1), (1, 0), (1, 1)),
    Kind.TROMINO_SE: ((0, 0), (0, 1), (1, 0)),
    Kind.TROMINO_SW: ((0, 0), (0, 1), (1, 1)),
    Kind.DOMINO_H: ((0, 0), (0, 1)),
    Kind.DOMINO_V: ((0, 0), (1, 0)),
    Kind.MONOMINO: ((0, 0),),
}

_SHAPE_LOOKUP = {frozenset(v): k for k, v in SHAPES.items()}

DIRECTIONS = {"N": (-1, 0), "S": (1, 0), "E": (0, 1), "W": (0, -1)}


@dataclass(frozen=True, order=True)
class Placement:
    kind: Kind
    anchor: Cell
    direction: str | None = field(default=None, compare=True)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "anchor", Cell(*self.anchor))
        if self.direction is not None and self.direction not in DIRECTIONS:
            raise BoardError(f"unknown direction {self.direction!r}")

    @property
    def cells(self) -> frozenset[Cell]:
        return covered_cells(self)

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value, "anchor": list(self.anchor)}
        if self.direction is not None:
            d["direction"] = self.direction
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Placement:
        return cls(Kind(d["kind"]), Cell(*d["anchor"]), d.get("direction"))


def covered_cells(p: Placement) -> frozenset[Cell]:
    r, c = p.anchor
    return frozenset(Cell(r + dr, c + dc) for dr, dc in SHAPES[p.kind])


def placement_from_cells(cells: Iterable[tuple[int, int]], direction: str | None = None) -> Placement:
    """Inverse of :func:`covered_cells`."""
    cells = [Cell(*c) for c in cells]
    r0 = min(c.row for c in cells)
    c0 = min(c.col for c in cells)
    key = frozenset((r - r0, c - c0) for r, c in cells)
    try:
        kind = _SHAPE_LOOKUP[key]
    except KeyError:
        raise BoardError(f"cells {sorted(cells)} do not form a tile") from None
    return Placement(kind, Cell(r0, c0), direction)


@dataclass(frozen=True)
class Tiling:
    board: DeficientBoard
    placements: tuple[Placement, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "placements", tuple(self.placements))

    def to_dict(self) -> dict:
        return {"board": self.board.to_dict(), "placements": [p.to_dict() for p in self.placements]}

    @classmethod
    def from_dict(cls, d: dict) -> Tiling:
        return cls(DeficientBoard.from_dict(d["board"]), tuple(Placement.from_dict(p) for p in d["placements"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def count(self, pred) -> int:
        return sum(1 for p in self.placements if pred(p.kind))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    error: str | None = None
    cell: Cell | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_tiling(t: Tiling) -> ValidationReport:
    """Check that the placements exactly partition the board minus its missing cells."""
    board = t.board
    seen: set[Cell] = set()
    for p in t.placements:
        for cell in sorted(covered_cells(p)):
            if not board.rect.contains(cell):
                return ValidationReport(False, "OUT_OF_BOUNDS", cell)
            if cell in board.missing:
                return ValidationReport(False, "COVERS_MISSING", cell)
            if cell in seen:
                return ValidationReport(False, "OVERLAP", cell)
            seen.add(cell)
    if len(seen) != board.area:
        for cell in board.cells():
            if cell not in seen:
                return ValidationReport(False, "UNCOVERED", cell)
    return ValidationReport(True)


class SymmetryOp(str, Enum):
    IDENTITY = "IDENTITY"
    FLIP_H = "FLIP_H"  # mirror across the vertical axis
    FLIP_V = "FLIP_V"  # mirror across the horizontal axis
    ROT_180 = "ROT_180"
    TRANSPOSE = "TRANSPOSE"


_DIR_MAP = {
    SymmetryOp.IDENTITY: {"N": "N", "S": "S", "E": "E", "W": "W"},
    SymmetryOp.FLIP_H: {"N": "N", "S": "S", "E": "W", "W": "E"},
    SymmetryOp.FLIP_V: {"N": "S", "S": "N", "E": "E", "W": "W"},
    SymmetryOp.ROT_180: {"N": "S", "S": "N", "E": "W", "W": "E"},
    SymmetryOp.TRANSPOSE: {"N": "W", "W": "N", "S": "E", "E": "S"},
}


def map_cell(cell: tuple[int, int], m: int, n: int, s: SymmetryOp) -> Cell:
    r, c = cell
    s = SymmetryOp(s)
    if s is SymmetryOp.IDENTITY:
        return Cell(r, c)
    if s is SymmetryOp.FLIP_H:
        return Cell(r, n + 1 - c)
    if s is SymmetryOp.FLIP_V:
        return Cell(m + 1 - r, c)
    if s is SymmetryOp.ROT_180:
        return Cell(m + 1 - r, n + 1 - c)
    return Cell(c, r)


def mapped_dims(m: int, n: int, s: SymmetryOp) -> tuple[int, int]:
    return (n, m) if SymmetryOp(s) is SymmetryOp.TRANSPOSE else (m, n)


def apply_symmetry(b: DeficientBoard, s: SymmetryOp) -> DeficientBoard:
    m, n = mapped_dims(b.m, b.n, s)
    return DeficientBoard(Rect(m, n), frozenset(map_cell(c, b.m, b.n, s) for c in b.missing))


def map_placement(p: Placement, m: int, n: int, s: SymmetryOp) -> Placement:
    cells = [map_cell(c, m, n, s) for c in covered_cells(p)]
    direction = _DIR_MAP[SymmetryOp(s)][p.direction] if p.direction else None
    return placement_from_cells(cells, direction)


def apply_symmetry_tiling(t: Tiling, s: SymmetryOp) -> Tiling:
    m, n = t.board.m, t.board.n
    return Tiling(apply_symmetry(t.board, s), tuple(map_placement(p, m, n, s) for p in t.placements))


def inverse(s: SymmetryOp) -> SymmetryOp:
    # every op in the group is an involution
    return SymmetryOp(s)


def translate(p: Placement, dr: int, dc: int) -> Placement:
    return Placement(p.kind, Cell(p.anchor.row + dr, p.anchor.col + dc), p.direction)


def hquad_shift(b: DeficientBoard, k: int, side: str) -> DeficientBoard:
    """Detach ``k`` columns from ``side`` and reattach them on the other side.

    Detaching on the RIGHT moves the missing cells ``k`` columns to the right
    relative to the top-left corner; detaching on the LEFT moves them left.
    """
    return _shift(b, k, side, axis=1)


def vquad_shift(b: DeficientBoard, k: int, side: str) -> DeficientBoard:
    """Row analogue of :func:`hquad_shift`; ``side`` is TOP or BOTTOM."""
    return _shift(b, k, side, axis=0)


def _shift(b: DeficientBoard, k: int, side: str, axis: int) -> DeficientBoard:
    if k < 0:
        raise BoardError("shift amount must be non-negative")
    side = side.upper()
    forward = {1: "RIGHT", 0: "BOTTOM"}[axis]
    backward = {1: "LEFT", 0: "TOP"}[axis]
    if side not in (forward, backward):
        raise BoardError(f"bad side {side!r} for this shift")
    size = b.n if axis == 1 else b.m
    if k > size:
        raise BoardError("shift larger than the board")
    delta = k if side == forward else -k
    moved = []
    for cell in b.missing:
        coord = cell[axis] + delta
        if not 1 <= coord <= size:
            raise BoardError(f"SHIFT_THROUGH_DEFICIENCY: cell {tuple(cell)} lies in the detached block")
        moved.append(Cell(cell.row, coord) if axis == 1 else Cell(coord, cell.col))
    return DeficientBoard(b.rect, frozenset(moved))


def full_rect_tileable(m: int, n: int) -> bool:
    """Tromino tileability of a full rectangle; an empty rectangle counts as tiled."""
    if m == 0 or n == 0:
        return True
    a, b = sorted((m, n))
    if (a * b) % 3 or a < 2:
        return False
    return not (a == 3 and b % 2 == 1)
