"""Explicit tilings from additive decompositions.

A board is cut into full rectangles (tiled by 2x3 and 3x2 blocks plus one
special 9x5 tiling) and a single small window holding every missing cell.
The window is tiled from the frozen base-case catalog, or searched when it is
not catalogued.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .basecases import base_case_table, lookup_base_case
from .board import (
    BoardError,
    Cell,
    DeficientBoard,
    Kind,
    Placement,
    Rect,
    SymmetryOp,
    Tiling,
    adjacent,
    apply_symmetry,
    full_rect_tileable,
    map_cell,
    map_placement,
    mapped_dims,
    translate,
)
from .characterize import UnsupportedShape, Verdict, decide
from .solver import DEFAULT_CAP, CapExceeded, solve_exact

WINDOW_SIDE = 16


class Untileable(Exception):
    def __init__(self, verdict: Verdict):
        super().__init__(f"UNTILEABLE: {verdict.reason} {verdict.detail}")
        self.verdict = verdict


@dataclass(frozen=True)
class DecompositionStep:
    """One region of a decomposition, 1-indexed top-left ``origin`` plus its size."""

    origin: Cell
    rect: Rect
    rule: str
    detail: str = ""

    def cells(self) -> set[Cell]:
        r0, c0 = self.origin
        return {Cell(r0 + i, c0 + j) for i in range(self.rect.rows) for j in range(self.rect.cols)}

    def to_dict(self) -> dict:
        d = {"origin": list(self.origin), "rows": self.rect.rows, "cols": self.rect.cols, "rule": self.rule}
        if self.detail:
            d["detail"] = self.detail
        return d


# --- full rectangles ------------------------------------------------------


def _step(r0: int, c0: int, rows: int, cols: int, rule: str, detail: str = "") -> list[DecompositionStep]:
    if rows == 0 or cols == 0:
        return []
    return [DecompositionStep(Cell(r0 + 1, c0 + 1), Rect(rows, cols), rule, detail)]


def full_rect_steps(r0: int, c0: int, a: int, b: int) -> list[DecompositionStep]:
    """Split the full ``a x b`` rectangle at 0-indexed offset (r0, c0) into tileable blocks."""
    if a == 0 or b == 0:
        return []
    if not full_rect_tileable(a, b):
        raise BoardError(f"UNTILEABLE_RECT: {a}x{b}")
    if a % 3 == 0 and b % 2 == 0:
        return _step(r0, c0, a, b, "FULL_RECT_EQ1")
    if a % 2 == 0 and b % 3 == 0:
        return _step(r0, c0, a, b, "FULL_RECT_2x3_GRID")
    if a % 6 == 0:
        return _step(r0, c0, a, b - 3, "FULL_RECT_EQ2") + _step(r0, c0 + b - 3, a, 3, "FULL_RECT_EQ2")
    if b % 6 == 0:
        return _step(r0, c0, a - 3, b, "FULL_RECT_EQ2") + _step(r0 + a - 3, c0, 3, b, "FULL_RECT_EQ2")
    if a % 3 == 0:
        # a odd and at least 9, b odd and at least 5
        w = b - 5
        return (
            _step(r0, c0, a, w, "FULL_RECT_EQ3")
            + _step(r0, c0 + w, 9, 5, "R9x5_SPECIAL")
            + _step(r0 + 9, c0 + w, a - 9, 2, "FULL_RECT_EQ3")
            + _step(r0 + 9, c0 + w + 2, a - 9, 3, "FULL_RECT_EQ3")
        )
    h = a - 5
    return (
        _step(r0, c0, h, b, "FULL_RECT_EQ3")
        + _step(r0 + h, c0, 5, 9, "R9x5_SPECIAL")
        + _step(r0 + h, c0 + 9, 2, b - 9, "FULL_RECT_EQ3")
        + _step(r0 + h + 2, c0 + 9, 3, b - 9, "FULL_RECT_EQ3")
    )


def _blocks(r0: int, c0: int, a: int, b: int) -> list[Placement]:
    out = []
    if a % 3 == 0 and b % 2 == 0:
        for r in range(r0, r0 + a, 3):
            for c in range(c0, c0 + b, 2):
                out.append(Placement(Kind.TROMINO_SE, Cell(r, c)))
                out.append(Placement(Kind.TROMINO_NW, Cell(r + 1, c)))
    else:
        for r in range(r0, r0 + a, 2):
            for c in range(c0, c0 + b, 3):
                out.append(Placement(Kind.TROMINO_NE, Cell(r, c)))
                out.append(Placement(Kind.TROMINO_SW, Cell(r, c + 1)))
    return out


@lru_cache(maxsize=None)
def _nine_by_five() -> tuple[Placement, ...]:
    t = lookup_base_case(DeficientBoard.of(9, 5))
    if t is None:
        t = solve_exact(DeficientBoard.of(9, 5))
    return t.placements


def _place(tiling_placements, origin: Cell) -> list[Placement]:
    dr, dc = origin.row - 1, origin.col - 1
    return [translate(p, dr, dc) for p in tiling_placements]


def _fill_full(step: DecompositionStep) -> list[Placement]:
    a, b = step.rect.rows, step.rect.cols
    if step.rule == "R9x5_SPECIAL":
        ps = _nine_by_five()
        if (a, b) == (5, 9):
            ps = tuple(map_placement(p, 9, 5, SymmetryOp.TRANSPOSE) for p in ps)
        return _place(ps, step.origin)
    return _blocks(step.origin.row, step.origin.col, a, b)


def tile_full_rect(r: Rect) -> Tiling:
    """Tiling of a full rectangle; raises BoardError UNTILEABLE_RECT when none exists."""
    steps = full_rect_steps(0, 0, r.rows, r.cols)
    placements = [p for s in steps for p in _fill_full(s)]
    return Tiling(DeficientBoard(r, frozenset()), tuple(placements))


# --- windows --------------------------------------------------------------


@lru_cache(maxsize=4096)
def _window_tiling(h: int, w: int, missing: tuple[Cell, ...]) -> tuple[Placement, ...] | None:
    b = DeficientBoard.of(h, w, missing)
    if not b.area_ok:
        return None
    try:
        if not decide(b).tileable:
            return None
    except UnsupportedShape:
        pass
    t = lookup_base_case(b)
    if t is None:
        t = solve_exact(b)
    return None if t is None else t.placements


def _complement(m: int, n: int, r0: int, c0: int, h: int, w: int):
    """Full-rectangle regions around a window, or None if some region is untileable."""
    layouts = (
        # bands across the full width, side blocks beside the window
        ((0, 0, r0, n), (r0 + h, 0, m - r0 - h, n), (r0, 0, h, c0), (r0, c0 + w, h, n - c0 - w)),
        # bands down the full height, blocks above and below the window
        ((0, 0, m, c0), (0, c0 + w, m, n - c0 - w), (0, c0, r0, w), (r0 + h, c0, m - r0 - h, w)),
    )
    for regions in layouts:
        if all(full_rect_tileable(rows, cols) for _, _, rows, cols in regions):
            return [reg for reg in regions if reg[2] and reg[3]]
    return None


def _window_sizes(m: int, n: int, k: int, span_r: int, span_c: int):
    sizes = [
        (h, w)
        for h in range(span_r, min(m, WINDOW_SIDE) + 1)
        for w in range(span_c, min(n, WINDOW_SIDE) + 1)
        if (h * w - k) % 3 == 0 and h * w <= DEFAULT_CAP
    ]
    sizes.sort(key=lambda hw: (hw[0] * hw[1], hw))
    return sizes


def _window_plan(b: DeficientBoard) -> list[DecompositionStep] | None:
    m, n = b.m, b.n
    miss = b.sorted_missing()
    rows = [c.row for c in miss]
    cols = [c.col for c in miss]
    rmin, rmax, cmin, cmax = min(rows), max(rows), min(cols), max(cols)
    primary = None
    for h, w in _window_sizes(m, n, len(miss), rmax - rmin + 1, cmax - cmin + 1):
        legal = []
        for r0 in range(max(0, rmax - h), min(rmin - 1, m - h) + 1):
            for c0 in range(max(0, cmax - w), min(cmin - 1, n - w) + 1):
                regions = _complement(m, n, r0, c0, h, w)
                if regions is not None:
                    legal.append((r0, c0, regions))
        if not legal:
            continue
        if primary is None:
            primary = (h, w)
        for i, (r0, c0, regions) in enumerate(legal):
            rel = tuple(Cell(r - r0, c - c0) for r, c in miss)
            if _window_tiling(h, w, rel) is None:
                continue
            if (h, w) != primary:
                rule = "JOIN_REPAIR"
            elif i == 0:
                rule = "BASE_CASE"
            else:
                rule = "SHIFT_REPAIR"
            rel_txt = " ".join(f"{r},{c}" for r, c in rel)
            steps = _step(r0, c0, h, w, rule, f"R({h},{w}) missing {rel_txt}")
            for rr, cc, a, bb in regions:
                steps += full_rect_steps(rr, cc, a, bb)
            return steps
    return None


def _fill(b: DeficientBoard, steps: list[DecompositionStep]) -> Tiling:
    placements: list[Placement] = []
    for s in steps:
        if s.rule.startswith("FULL_RECT") or s.rule == "R9x5_SPECIAL":
            placements += _fill_full(s)
            continue
        r0, c0 = s.origin.row - 1, s.origin.col - 1
        rel = tuple(sorted(Cell(r - r0, c - c0) for r, c in b.missing if s.rect.contains((r - r0, c - c0))))
        ps = _window_tiling(s.rect.rows, s.rect.cols, rel)
        if ps is None:
            raise AssertionError(f"window {s} has no tiling")
        placements += _place(ps, s.origin)
    return Tiling(b, tuple(placements))


# --- dog-eared rectangles -------------------------------------------------


_CORNER_OPS = {"TR": SymmetryOp.IDENTITY, "TL": SymmetryOp.FLIP_H, "BR": SymmetryOp.FLIP_V, "BL": SymmetryOp.ROT_180}


def dog_eared_board(m: int, n: int, corner: str, orientation: str) -> DeficientBoard:
    """``m x n`` board missing a domino at ``corner`` (TL/TR/BL/BR), lying H or V."""
    cells = ((1, n - 1), (1, n)) if orientation.upper() == "H" else ((1, n), (2, n))
    op = _CORNER_OPS[corner.upper()]
    base = DeficientBoard.of(m, n, cells)
    return apply_symmetry(base, op)


def _corner_of(b: DeficientBoard) -> str | None:
    m, n = b.m, b.n
    if not b.is_domino_deficient:
        return None
    for name, corner in (("TL", (1, 1)), ("TR", (1, n)), ("BL", (m, 1)), ("BR", (m, n))):
        if corner in b.missing:
            return name
    return None


def _dog_eared_steps(m: int, n: int) -> list[DecompositionStep]:
    """Canonical frame: m = 3j+4, n = 3k+5, domino at the top-right corner."""
    j, k = (m - 4) // 3, (n - 5) // 3
    if m == 4:
        return full_rect_steps(0, 0, 4, 3 * k) + _step(0, 3 * k, 4, 5, "BASE_CASE", "R(4,5) dog-eared")
    strip = 6 * (k // 2)
    steps = full_rect_steps(0, 0, m, strip)
    if m == 7 and k % 2 == 0:
        return steps + _step(0, strip, 7, 5, "BASE_CASE", "R(7,5) dog-eared")
    if k % 2 == 0:
        return steps + full_rect_steps(4, strip, 3 * j, 5) + _step(0, strip, 4, 5, "BASE_CASE", "R(4,5) dog-eared")
    return (
        steps
        + full_rect_steps(4, strip, 3 * j, 8)
        + full_rect_steps(0, strip, 4, 3)
        + _step(0, strip + 3, 4, 5, "BASE_CASE", "R(4,5) dog-eared")
    )


def _to_canonical(b: DeficientBoard) -> tuple[DeficientBoard, list[SymmetryOp]]:
    ops = []
    if b.m % 3 == 2:
        ops.append(SymmetryOp.TRANSPOSE)
        b = apply_symmetry(b, SymmetryOp.TRANSPOSE)
    op = _CORNER_OPS[_corner_of(b)]
    if op is not SymmetryOp.IDENTITY:
        ops.append(op)
        b = apply_symmetry(b, op)
    return b, ops


def _from_canonical(t: Tiling, ops: list[SymmetryOp], original: DeficientBoard) -> Tiling:
    placements = t.placements
    m, n = t.board.m, t.board.n
    for op in reversed(ops):
        placements = tuple(map_placement(p, m, n, op) for p in placements)
        m, n = mapped_dims(m, n, op)
    return Tiling(original, placements)


def _map_steps(steps, ops, m, n):
    out = []
    for s in steps:
        r0, c0 = s.origin
        corners = [(r0, c0), (r0 + s.rect.rows - 1, c0 + s.rect.cols - 1)]
        mm, nn = m, n
        for op in reversed(ops):
            corners = [map_cell(c, mm, nn, op) for c in corners]
            mm, nn = mapped_dims(mm, nn, op)
        (a, b), (c, d) = corners
        out.append(DecompositionStep(Cell(min(a, c), min(b, d)), Rect(abs(a - c) + 1, abs(b - d) + 1), s.rule, s.detail))
    return out


def _is_dog_eared(b: DeficientBoard) -> bool:
    return (
        b.is_domino_deficient
        and b.area_ok
        and min(b.m, b.n) >= 4
        and _corner_of(b) is not None
    )


def _dog_eared_plan(b: DeficientBoard) -> tuple[list[DecompositionStep], DeficientBoard, list[SymmetryOp]]:
    canon, ops = _to_canonical(b)
    return _dog_eared_steps(canon.m, canon.n), canon, ops


def tile_dog_eared(m: int, n: int, corner: str = "TR", orientation: str = "H") -> Tiling:
    """Tiling of an ``m x n`` rectangle with a domino removed at a corner."""
    if (m * n - 2) % 3 or min(m, n) < 4:
        raise BoardError(f"BAD_SHAPE: dog-eared {m}x{n} needs m, n >= 4 and 3 | (mn - 2)")
    b = dog_eared_board(m, n, corner, orientation)
    steps, canon, ops = _dog_eared_plan(b)
    return _from_canonical(_fill(canon, steps), ops, b)


# --- n x 4 with two separated missing cells --------------------------------


def _nx4_plan(b: DeficientBoard) -> list[DecompositionStep] | None:
    """Two 4x4 windows, one per missing cell, with 3x4 slabs elsewhere."""
    m = b.m
    (ra, _), (rb, _) = sorted(b.missing)
    for a0 in range(0, m - 7, 3):
        if not a0 < ra <= a0 + 4:
            continue
        for b0 in range(a0 + 4, m - 3, 3):
            if (m - b0 - 4) % 3 or not b0 < rb <= b0 + 4:
                continue
            steps = full_rect_steps(0, 0, a0, 4)
            steps += _step(a0, 0, 4, 4, "BASE_CASE", "R(4,4) one cell")
            steps += full_rect_steps(a0 + 4, 0, b0 - a0 - 4, 4)
            steps += _step(b0, 0, 4, 4, "BASE_CASE", "R(4,4) one cell")
            steps += full_rect_steps(b0 + 4, 0, m - b0 - 4, 4)
            return steps
    return None


def tile_Nx4_2deficient(b: DeficientBoard) -> Tiling:
    """Tiling of an m x 4 board (m = 2 mod 3, m >= 8) missing any two cells."""
    work = b if b.n == 4 else apply_symmetry(b, SymmetryOp.TRANSPOSE)
    if work.n != 4 or work.m % 3 != 2 or work.m < 8 or len(work.missing) != 2:
        raise BoardError("BAD_SHAPE: needs an m x 4 board, m = 2 mod 3, m >= 8, two missing cells")
    v = decide(work)
    if not v.tileable:
        raise Untileable(v)
    steps = _nx4_plan(work) or _window_plan(work)
    t = _fill(work, steps)
    if work is not b:
        t = Tiling(b, tuple(map_placement(p, work.m, 4, SymmetryOp.TRANSPOSE) for p in t.placements))
    return t


# --- dispatch -------------------------------------------------------------


def _verdict(b: DeficientBoard) -> Verdict:
    try:
        return decide(b)
    except UnsupportedShape:
        t = solve_exact(b)  # raises CapExceeded on large boards
        if t is None:
            return Verdict(False, "NO_FIT", {"why": "exhaustive search found no tiling"})
        return Verdict(True, "POSITIVE", {"theorem": "SEARCH"})


def decompose(b: DeficientBoard) -> list[DecompositionStep]:
    """Regions and rules used to tile ``b``; raises Untileable when there is no tiling."""
    v = _verdict(b)
    if not v.tileable:
        raise Untileable(v)
    if b.area == 0:
        return _step(0, 0, b.m, b.n, "BASE_CASE", "empty")
    if not b.missing:
        return full_rect_steps(0, 0, b.m, b.n)
    if _is_dog_eared(b):
        steps, canon, ops = _dog_eared_plan(b)
        return _map_steps(steps, ops, canon.m, canon.n)
    if len(b.missing) == 2 and not b.is_domino_deficient and 4 in (b.m, b.n):
        work = b if b.n == 4 else apply_symmetry(b, SymmetryOp.TRANSPOSE)
        if work.m % 3 == 2 and work.m >= 8:
            steps = _nx4_plan(work)
            if steps is not None:
                return steps if work is b else _map_steps(steps, [SymmetryOp.TRANSPOSE], work.m, work.n)
    steps = _window_plan(b)
    if steps is None:
        if b.m * b.n <= DEFAULT_CAP:
            return _step(0, 0, b.m, b.n, "BASE_CASE", "searched")
        raise CapExceeded(f"CAP_EXCEEDED: no window decomposition for {b.m}x{b.n}")
    return steps


def construct_tiling(b: DeficientBoard) -> Tiling:
    """An explicit tiling of ``b``; raises Untileable (carrying the verdict) when none exists."""
    steps = decompose(b)
    if _is_dog_eared(b):
        _, canon, ops = _dog_eared_plan(b)
        return _from_canonical(_fill(canon, _dog_eared_steps(canon.m, canon.n)), ops, b)
    return _fill(b, steps)


__all__ = [
    "DecompositionStep",
    "Untileable",
    "base_case_table",
    "construct_tiling",
    "decompose",
    "dog_eared_board",
    "full_rect_steps",
    "solve_exact",
    "tile_Nx4_2deficient",
    "tile_dog_eared",
    "tile_full_rect",
]
