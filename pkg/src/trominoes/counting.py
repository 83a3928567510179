"""Exact tiling counts by broken-profile dynamic programming.

The sweep runs column by column, top to bottom within a column, over a board
with ``H`` rows.  The state is a bitmask over the ``H + 2`` cells starting at
the current one (bit ``k`` is cell ``i + k`` in sweep order), which is exactly
the set of cells a piece anchored at the current cell can reach.  Counts are
Python integers, so they are exact at any size.
"""

from __future__ import annotations

from collections import defaultdict
from enum import Enum
from typing import Iterable

from .board import DeficientBoard, Rect, Tiling, adjacent
from .solver import iter_tilings

WIDTH_CAP = 16


class WidthCapExceeded(ValueError):
    pass


def _profile_count(
    rows: int,
    cols: int,
    blocked: Iterable[tuple[int, int]] = (),
    trominoes: bool = True,
    dominoes: int | None = 0,
) -> int:
    """Count tilings of a ``rows x cols`` grid minus ``blocked`` (0-indexed cells).

    ``dominoes`` is the exact number of dominoes to use, or None for any number.
    """
    H, W = rows, cols
    if H == 0 or W == 0:
        return 1 if dominoes in (0, None) else 0
    total = H * W
    is_blocked = bytearray(total + H + 2)
    for r, c in blocked:
        is_blocked[c * H + r] = 1

    pieces_by_row = []
    for r in range(H):
        opts = []
        down = r + 1 < H
        if trominoes:
            if down:
                opts.append((0b11 | 1 << H, 0, True))  # (r,c),(r+1,c),(r,c+1)
                opts.append((0b11 | 1 << (H + 1), 0, True))  # (r,c),(r+1,c),(r+1,c+1)
                opts.append((1 | 3 << H, 0, True))  # (r,c),(r,c+1),(r+1,c+1)
            if r > 0:
                opts.append((1 | 3 << (H - 1), 0, True))  # (r,c),(r-1,c+1),(r,c+1)
        if dominoes != 0:
            if down:
                opts.append((0b11, 1, False))
            opts.append((1 | 1 << H, 1, True))
        pieces_by_row.append(opts)

    start = 0
    for k in range(H + 2):
        if k < total and is_blocked[k]:
            start |= 1 << k
    limit = dominoes if dominoes is not None else None
    dp: dict[tuple[int, int], int] = {(start, 0): 1}
    for i in range(total):
        r, c = i % H, i // H
        in_last_col = c == W - 1
        incoming = (1 << (H + 1)) if (i + H + 2 < total and is_blocked[i + H + 2]) else 0
        nxt: dict[tuple[int, int], int] = defaultdict(int)
        for (mask, used), ways in dp.items():
            if mask & 1:
                nxt[(mask >> 1 | incoming, used)] += ways
                continue
            for pmask, dcost, nextcol in pieces_by_row[r]:
                if mask & pmask or (nextcol and in_last_col):
                    continue
                u = used + dcost
                if limit is not None and u > limit:
                    continue
                key = ((mask | pmask) >> 1 | incoming, u if limit is not None else 0)
                nxt[key] += ways
        dp = nxt
        if not dp:
            return 0
    if limit is None:
        return dp.get((0, 0), 0)
    return dp.get((0, limit), 0)


def _oriented(m: int, n: int, cells: Iterable[tuple[int, int]], transpose: bool | None):
    """Map 1-indexed board cells to the DP's 0-indexed (row, col) frame."""
    if transpose is None:
        transpose = m > n
    if transpose:
        m, n = n, m
        cells = [(c, r) for r, c in cells]
    if m > WIDTH_CAP:
        raise WidthCapExceeded(f"WIDTH_CAP: both dimensions exceed {WIDTH_CAP}")
    return m, n, [(r - 1, c - 1) for r, c in cells]


def count_tromino(b: DeficientBoard, transpose: bool | None = None) -> int:
    """Number of right-tromino tilings of ``b``; missing cells are pre-filled."""
    if b.area % 3:
        return 0
    H, W, blocked = _oriented(b.m, b.n, b.missing, transpose)
    return _profile_count(H, W, blocked)


def count_region(rows: int, cols: int, blocked: Iterable[tuple[int, int]], transpose: bool | None = None) -> int:
    """Tromino tilings of a rectangle minus an arbitrary set of 1-indexed cells."""
    blocked = list(blocked)
    if (rows * cols - len(set(blocked))) % 3:
        return 0
    H, W, bl = _oriented(rows, cols, blocked, transpose)
    return _profile_count(H, W, bl)


def count_tromino_plus_one_domino(r: Rect, transpose: bool | None = None) -> int:
    """Tilings of a full rectangle by right trominoes and exactly one domino."""
    if (r.area - 2) % 3:
        raise ValueError(f"AREA: {r.rows}x{r.cols} minus a domino is not divisible by 3")
    H, W, _ = _oriented(r.rows, r.cols, (), transpose)
    return _profile_count(H, W, (), trominoes=True, dominoes=1)


def domino_positions(m: int, n: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    out = []
    for r in range(1, m + 1):
        for c in range(1, n + 1):
            if c < n:
                out.append(((r, c), (r, c + 1)))
            if r < m:
                out.append(((r, c), (r + 1, c)))
    return out


def count_mixed_by_positions(r: Rect) -> int:
    """Cross-check path: sum of tromino counts over every removed domino."""
    return sum(count_tromino(DeficientBoard.of(r.rows, r.cols, d)) for d in domino_positions(r.rows, r.cols))


def count_mixed_split(r: Rect) -> tuple[int, int]:
    """(vertical, horizontal) split of the mixed count by the domino's orientation."""
    vert = horiz = 0
    for d in domino_positions(r.rows, r.cols):
        k = count_tromino(DeficientBoard.of(r.rows, r.cols, d))
        if d[0][1] == d[1][1]:
            vert += k
        else:
            horiz += k
    return vert, horiz


def count_domino(r: Rect, transpose: bool | None = None) -> int:
    if r.area % 2:
        return 0
    H, W, _ = _oriented(r.rows, r.cols, (), transpose)
    return _profile_count(H, W, (), trominoes=False, dominoes=None)


class InterfaceKind(str, Enum):
    STRAIGHT = "STRAIGHT"
    DEEP_JOG = "DEEP_JOG"
    SHALLOW_JOG = "SHALLOW_JOG"


# Per-row extension (in cells, rows 1..4) of the right boundary past column
# 3t.  Fixed by matching count sequences against the series of G1
# and G2; see scripts/match_jogs.py.
INTERFACE_PROFILES: dict[InterfaceKind, tuple[int, int, int, int]] = {
    InterfaceKind.STRAIGHT: (0, 0, 0, 0),
    InterfaceKind.DEEP_JOG: (1, 1, -1, -1),
    InterfaceKind.SHALLOW_JOG: (2, 2, 1, 1),
}


def interface_region(profile: tuple[int, ...], t: int) -> tuple[int, int, list[tuple[int, int]]] | None:
    """Bounding box and blocked cells for the width-4 region with the given boundary."""
    lengths = [3 * t + e for e in profile]
    if min(lengths) < 0:
        return None
    cols = max(lengths)
    blocked = [(r + 1, c) for r, L in enumerate(lengths) for c in range(L + 1, cols + 1)]
    return len(profile), cols, blocked


def count_profile(profile: tuple[int, ...], t: int) -> int:
    region = interface_region(profile, t)
    if region is None:
        return 0
    rows, cols, blocked = region
    if cols == 0:
        return 1
    return count_region(rows, cols, blocked, transpose=False)


def count_interface(kind: InterfaceKind, t: int) -> int:
    if t < 0:
        raise ValueError("t must be non-negative")
    return count_profile(INTERFACE_PROFILES[InterfaceKind(kind)], t)


def enumerate_tilings(
    b: DeficientBoard, limit: int | None = None, dominoes: int = 0, cap: int | None = 48
) -> list[Tiling]:
    """All tilings of ``b`` (up to ``limit``) in the oracle's deterministic order."""
    out = []
    for t in iter_tilings(b, dominoes=dominoes, cap=cap):
        out.append(t)
        if limit is not None and len(out) >= limit:
            break
    return out


__all__ = [
    "WIDTH_CAP",
    "WidthCapExceeded",
    "InterfaceKind",
    "INTERFACE_PROFILES",
    "adjacent",
    "count_domino",
    "count_interface",
    "count_mixed_by_positions",
    "count_mixed_split",
    "count_profile",
    "count_region",
    "count_tromino",
    "count_tromino_plus_one_domino",
    "domino_positions",
    "enumerate_tilings",
    "interface_region",
]
