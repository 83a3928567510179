"""Exact-cover search: the independent oracle for every table in the package.

The search always covers the first uncovered cell in row-major order, trying
placements in a fixed kind order, so results are deterministic.  Boards wider
than they are tall are searched in transposed form (the frontier is then at
most ``min(m, n)`` cells wide) and the result is mapped back.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from typing import Iterator

from .board import (
    Cell,
    DeficientBoard,
    Kind,
    Placement,
    SymmetryOp,
    Tiling,
    apply_symmetry,
    apply_symmetry_tiling,
)

DEFAULT_CAP = 176

# (kind, anchor offset, covered offsets) for a piece whose first cell in
# row-major order is the origin
_CANDIDATES = (
    (Kind.TROMINO_NE, (0, 0), ((0, 0), (1, 0), (1, 1))),
    (Kind.TROMINO_NW, (0, -1), ((0, 0), (1, -1), (1, 0))),
    (Kind.TROMINO_SE, (0, 0), ((0, 0), (0, 1), (1, 0))),
    (Kind.TROMINO_SW, (0, 0), ((0, 0), (0, 1), (1, 1))),
    (Kind.DOMINO_H, (0, 0), ((0, 0), (0, 1))),
    (Kind.DOMINO_V, (0, 0), ((0, 0), (1, 0))),
)


class CapExceeded(ValueError):
    pass


@lru_cache(maxsize=64)
def _moves(m: int, n: int) -> tuple[tuple[tuple[int, Placement, bool], ...], ...]:
    """Per cell index: (mask, placement, is_domino) for every piece starting there."""
    table = []
    for r in range(m):
        for c in range(n):
            opts = []
            for kind, (ar, ac), offs in _CANDIDATES:
                mask = 0
                for dr, dc in offs:
                    rr, cc = r + dr, c + dc
                    if not (0 <= rr < m and 0 <= cc < n):
                        break
                    mask |= 1 << (rr * n + cc)
                else:
                    p = Placement(kind, Cell(r + ar + 1, c + ac + 1))
                    opts.append((mask, p, kind.is_domino))
            table.append(tuple(opts))
    return tuple(table)


def _prepare(b: DeficientBoard, cap: int | None) -> tuple[DeficientBoard, bool]:
    if cap is not None and b.m * b.n > cap:
        raise CapExceeded(f"CAP_EXCEEDED: {b.m}x{b.n} has {b.m * b.n} cells, cap is {cap}")
    flip = b.n > b.m
    return (apply_symmetry(b, SymmetryOp.TRANSPOSE) if flip else b), flip


def _start_mask(b: DeficientBoard) -> int:
    mask = 0
    for r, c in b.missing:
        mask |= 1 << ((r - 1) * b.n + (c - 1))
    return mask


def solve_exact(
    b: DeficientBoard, dominoes: int = 0, cap: int | None = DEFAULT_CAP
) -> Tiling | None:
    """Return one tiling by right trominoes plus exactly ``dominoes`` (0 or 1) dominoes, or None."""
    if dominoes not in (0, 1):
        raise ValueError("dominoes must be 0 or 1")
    work, flip = _prepare(b, cap)
    m, n = work.m, work.n
    full = (1 << (m * n)) - 1
    moves = _moves(m, n)
    dead: set[tuple[int, int]] = set()
    chosen: list[Placement] = []

    def dfs(mask: int, left: int) -> bool:
        if mask == full:
            return left == 0
        if (mask, left) in dead:
            return False
        i = ((mask + 1) & ~mask).bit_length() - 1
        for pmask, p, is_dom in moves[i]:
            if mask & pmask:
                continue
            if is_dom and not left:
                continue
            chosen.append(p)
            if dfs(mask | pmask, left - is_dom):
                return True
            chosen.pop()
        dead.add((mask, left))
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, m * n + 100))
    try:
        found = dfs(_start_mask(work), dominoes)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return None
    t = Tiling(work, tuple(chosen))
    return apply_symmetry_tiling(t, SymmetryOp.TRANSPOSE) if flip else t


def is_tileable(b: DeficientBoard, cap: int | None = DEFAULT_CAP) -> bool:
    return solve_exact(b, cap=cap) is not None


def iter_tilings(b: DeficientBoard, dominoes: int = 0, cap: int | None = DEFAULT_CAP) -> Iterator[Tiling]:
    """Yield every tiling of ``b`` (trominoes plus exactly ``dominoes`` dominoes)."""
    if cap is not None and b.m * b.n > cap:
        raise CapExceeded(f"CAP_EXCEEDED: {b.m}x{b.n} has {b.m * b.n} cells, cap is {cap}")
    m, n = b.m, b.n
    full = (1 << (m * n)) - 1
    moves = _moves(m, n)
    chosen: list[Placement] = []

    def rec(mask: int, left: int) -> Iterator[Tiling]:
        if mask == full:
            if left == 0:
                yield Tiling(b, tuple(chosen))
            return
        i = ((mask + 1) & ~mask).bit_length() - 1
        for pmask, p, is_dom in moves[i]:
            if mask & pmask or (is_dom and not left):
                continue
            chosen.append(p)
            yield from rec(mask | pmask, left - is_dom)
            chosen.pop()

    yield from rec(_start_mask(b), dominoes)
