"""Constant-time tileability decisions from the complete bad-pair characterizations."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .board import (
    Cell,
    DeficientBoard,
    Rect,
    SymmetryOp,
    adjacent,
    apply_symmetry,
    full_rect_tileable,
    map_cell,
)
from .tables import R4X5_BAD, R8X4_NONADJACENT_BAD


class BadShape(ValueError):
    pass


class UnsupportedShape(ValueError):
    pass


@dataclass(frozen=True)
class BadPair:
    """An unordered pair of missing cells, stated from the top-left corner of ``frame``."""

    cells: frozenset[Cell]
    frame: Rect | None = field(default=None, compare=False, hash=False)

    @classmethod
    def of(cls, a: tuple[int, int], b: tuple[int, int], frame: Rect | None = None) -> BadPair:
        if a == b:
            raise ValueError("a pair needs two distinct cells")
        return cls(frozenset((Cell(*a), Cell(*b))), frame)

    @property
    def sorted(self) -> tuple[Cell, Cell]:
        a, b = sorted(self.cells)
        return a, b

    @property
    def is_domino(self) -> bool:
        return adjacent(*self.cells)

    def __repr__(self) -> str:
        a, b = self.sorted
        return f"{{{tuple(a)},{tuple(b)}}}"


@dataclass(frozen=True)
class Verdict:
    tileable: bool
    reason: str  # BAD_PAIR | AREA | NO_FIT | POSITIVE
    detail: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if not self.tileable and self.reason == "POSITIVE":
            raise ValueError("an untileable verdict needs a negative reason")

    def to_dict(self) -> dict:
        return {"tileable": self.tileable, "reason": self.reason, **self.detail}


def _pairs(raw, frame: Rect) -> frozenset[BadPair]:
    return frozenset(BadPair.of(a, b, frame) for a, b in raw)


def domino_positions(m: int, n: int):
    for r in range(1, m + 1):
        for c in range(1, n + 1):
            if c < n:
                yield (r, c), (r, c + 1)
            if r < m:
                yield (r, c), (r + 1, c)


# --- 2 x n ----------------------------------------------------------------


def direc_tileable(n: int, pair) -> bool:
    """Whether a 2 x n rectangle minus the domino ``pair`` can be tiled."""
    if n % 3 != 1 or n < 4:
        raise BadShape(f"BAD_SHAPE: 2x{n} needs n = 1 mod 3, n >= 4")
    (r1, c1), (r2, c2) = sorted(pair)
    if c1 == c2:
        return c1 % 3 == 1
    return r1 == r2 and c1 % 3 == 2


def bad_pairs_2xN(n: int) -> frozenset[BadPair]:
    frame = Rect(2, n)
    return frozenset(
        BadPair.of(a, b, frame) for a, b in domino_positions(2, n) if not direc_tileable(n, (a, b))
    )


# --- 4 x n ----------------------------------------------------------------


def bad_pairs_4xN(n: int) -> frozenset[BadPair]:
    if n % 3 != 2 or n < 8:
        raise BadShape(f"BAD_SHAPE: 4x{n} needs n = 2 mod 3, n >= 8")
    raw = [
        ((2, 1), (2, 2)), ((1, 2), (2, 2)),
        ((2, n - 1), (2, n)), ((1, n - 1), (2, n - 1)),
        ((3, 1), (3, 2)), ((3, 2), (4, 2)),
        ((3, n - 1), (3, n)), ((3, n - 1), (4, n - 1)),
        ((2, 3), (3, 3)), ((2, n - 2), (3, n - 2)),
        ((2, 3), (2, 4)), ((2, n - 3), (2, n - 2)),
        ((3, 3), (3, 4)), ((3, n - 3), (3, n - 2)),
    ]  # fmt: skip
    return _pairs(raw, Rect(4, n))


def bad_pairs_4x5() -> frozenset[BadPair]:
    return _pairs(R4X5_BAD, Rect(4, 5))


# --- 5 x n ----------------------------------------------------------------


def _even_row_or_col(a: tuple[int, int], b: tuple[int, int]) -> bool:
    # both cells on an even row, or both on an even column
    return (a[0] % 2 == 0 and b[0] % 2 == 0) or (a[1] % 2 == 0 and b[1] % 2 == 0)


def bad_pairs_5x7() -> frozenset[BadPair]:
    frame = Rect(5, 7)
    out = {BadPair.of(a, b, frame) for a, b in domino_positions(5, 7) if _even_row_or_col(a, b)}
    out |= {BadPair.of((3, 2), (3, 3), frame), BadPair.of((3, 5), (3, 6), frame)}
    return frozenset(out)


def bad_pairs_5xN(n: int) -> frozenset[BadPair]:
    if n % 3 != 1 or n < 10:
        raise BadShape(f"BAD_SHAPE: 5x{n} needs n = 1 mod 3, n >= 10")
    raw = [
        ((2, 1), (2, 2)), ((2, n - 1), (2, n)),
        ((4, 1), (4, 2)), ((4, n - 1), (4, n)),
        ((1, 2), (2, 2)), ((1, n - 1), (2, n - 1)),
        ((4, 2), (5, 2)), ((4, n - 1), (5, n - 1)),
        ((2, 3), (2, 4)), ((2, n - 3), (2, n - 2)),
        ((4, 3), (4, 4)), ((4, n - 3), (4, n - 2)),
        ((2, 2), (3, 2)), ((3, 2), (4, 2)),
        ((2, n - 1), (3, n - 1)), ((3, n - 1), (4, n - 1)),
        ((3, 2), (3, 3)), ((3, n - 2), (3, n - 1)),
    ]  # fmt: skip
    return _pairs(raw, Rect(5, n))


# --- m, n >= 7 ------------------------------------------------------------


def _seven_row_list(n: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    return [
        ((2, 1), (2, 2)), ((6, 1), (6, 2)),
        ((2, n - 1), (2, n)), ((6, n - 1), (6, n)),
        ((1, 2), (2, 2)), ((6, 2), (7, 2)),
        ((1, n - 1), (2, n - 1)), ((6, n - 1), (7, n - 1)),
        ((2, 3), (2, 4)), ((2, n - 3), (2, n - 2)),
        ((6, 3), (6, 4)), ((6, n - 3), (6, n - 2)),
        ((3, 2), (4, 2)), ((4, 2), (5, 2)),
        ((3, n - 1), (4, n - 1)), ((4, n - 1), (5, n - 1)),
    ]  # fmt: skip


def bad_pairs_7or10xN(m: int, n: int) -> frozenset[BadPair]:
    if m not in (7, 10) or n % 3 != 2 or n < 8:
        raise BadShape(f"BAD_SHAPE: {m}x{n} needs m in (7, 10), n = 2 mod 3, n >= 8")
    pairs = _seven_row_list(n)
    if m == 10:
        # a pair not anchored at the top is the mirror of one that is; carry it
        # to the mirrored position of the taller frame
        moved = []
        for a, b in pairs:
            if min(a[0], b[0]) <= 3:
                moved.append((a, b))
            else:
                ta, tb = map_cell(a, 7, n, SymmetryOp.FLIP_V), map_cell(b, 7, n, SymmetryOp.FLIP_V)
                moved.append((map_cell(ta, 10, n, SymmetryOp.FLIP_V), map_cell(tb, 10, n, SymmetryOp.FLIP_V)))
        pairs = moved
    return _pairs(pairs, Rect(m, n))


def bad_pairs_general(m: int, n: int) -> frozenset[BadPair]:
    if m < 7 or n < 7 or (m * n - 2) % 3:
        raise BadShape(f"BAD_SHAPE: {m}x{n} needs m, n >= 7 and 3 | (mn - 2)")
    seeds = [((2, 1), (2, 2)), ((1, 2), (2, 2)), ((2, 3), (2, 4)), ((3, 2), (4, 2))]
    frame = Rect(m, n)
    out = set()
    for s in (SymmetryOp.IDENTITY, SymmetryOp.FLIP_H, SymmetryOp.FLIP_V, SymmetryOp.ROT_180):
        for a, b in seeds:
            out.add(BadPair.of(map_cell(a, m, n, s), map_cell(b, m, n, s), frame))
    return frozenset(out)


# --- n x 4, arbitrary two missing cells -----------------------------------


def _nx4_nonadjacent(m: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    out = []
    for a, b in R8X4_NONADJACENT_BAD:
        if max(a[0], b[0]) <= 4:
            out.append((a, b))
        else:
            out.append(((a[0] + m - 8, a[1]), (b[0] + m - 8, b[1])))
    return out


@lru_cache(maxsize=None)
def bad_pairs_Nx4_general(m: int) -> frozenset[BadPair]:
    """Every bad pair (adjacent or not) of an m x 4 rectangle, m = 2 mod 3, m >= 8."""
    if m % 3 != 2 or m < 8:
        raise BadShape(f"BAD_SHAPE: {m}x4 needs m = 2 mod 3, m >= 8")
    frame = Rect(m, 4)
    dominoes = [
        (map_cell(a, 4, m, SymmetryOp.TRANSPOSE), map_cell(b, 4, m, SymmetryOp.TRANSPOSE))
        for a, b in (p.sorted for p in bad_pairs_4xN(m))
    ]
    return _pairs(dominoes + _nx4_nonadjacent(m), frame)


# --- dispatch -------------------------------------------------------------


def bad_pairs_for(m: int, n: int) -> tuple[str, frozenset[BadPair]]:
    """The applicable domino bad-pair table for an m x n rectangle, in its own frame."""
    if (m * n - 2) % 3:
        raise BadShape(f"BAD_SHAPE: 3 does not divide {m}*{n} - 2")
    if m > n:
        name, pairs = bad_pairs_for(n, m)
        frame = Rect(m, n)
        return name, frozenset(
            BadPair.of(*(map_cell(c, n, m, SymmetryOp.TRANSPOSE) for c in p.sorted), frame) for p in pairs
        )
    if m == 1:
        return "NONE", frozenset()
    if m == 2:
        return "DIREC", bad_pairs_2xN(n)
    if m == 4:
        return ("R4X5", bad_pairs_4x5()) if n == 5 else ("QUADREC", bad_pairs_4xN(n))
    if m == 5:
        return ("R5X7", bad_pairs_5x7()) if n == 7 else ("PENTREC", bad_pairs_5xN(n))
    return "DOMINO_DEFICIENT_RECTANGLE", bad_pairs_general(m, n)


def _decide_full(m: int, n: int) -> Verdict:
    if full_rect_tileable(m, n):
        return Verdict(True, "POSITIVE", {"theorem": "CHU_JOHNSONBAUGH"})
    return Verdict(False, "NO_FIT", {"why": f"{m}x{n} has a side of 1 or is 3 x odd"})


def _decide_one(b: DeficientBoard) -> Verdict:
    a, c = sorted((b.m, b.n))
    if a == 1:
        if c == 1:
            return Verdict(True, "POSITIVE", {"theorem": "EMPTY"})
        return Verdict(False, "NO_FIT", {"why": "no tromino fits in a single row"})
    if (a != 2 or c == 2) and a != 5:
        return Verdict(True, "POSITIVE", {"theorem": "DEFICIENT_RECTANGLE"})
    raise UnsupportedShape(
        f"UNSUPPORTED_SHAPE: {b.m}x{b.n} with one missing cell depends on its position"
    )


def _decide_domino(b: DeficientBoard) -> Verdict:
    m, n = b.m, b.n
    if min(m, n) == 1:
        if m * n == 2:
            return Verdict(True, "POSITIVE", {"theorem": "EMPTY"})
        return Verdict(False, "NO_FIT", {"why": "no tromino fits in a single row"})
    name, pairs = bad_pairs_for(m, n)
    a, c = sorted(b.missing)
    key = BadPair.of(a, c)
    if key in pairs:
        return Verdict(False, "BAD_PAIR", {"pair": [list(a), list(c)], "table": name})
    return Verdict(True, "POSITIVE", {"theorem": name})


def _decide_nx4(b: DeficientBoard) -> Verdict:
    work = b
    if b.n != 4:
        work = apply_symmetry(b, SymmetryOp.TRANSPOSE)
    m = work.m
    if work.n != 4 or m % 3 != 2 or m < 8:
        raise UnsupportedShape(
            f"UNSUPPORTED_SHAPE: two separated missing cells are only characterized on n x 4, n >= 8"
        )
    a, c = sorted(work.missing)
    if BadPair.of(a, c) in bad_pairs_Nx4_general(m):
        orig = sorted(b.missing)
        return Verdict(False, "BAD_PAIR", {"pair": [list(x) for x in orig], "table": "NX4_GENERAL"})
    return Verdict(True, "POSITIVE", {"theorem": "NX4_GENERAL"})


def decide(b: DeficientBoard) -> Verdict:
    """Decide tromino tileability of ``b`` without searching."""
    if not b.area_ok:
        return Verdict(False, "AREA", {"area": b.area})
    k = len(b.missing)
    if k == 0:
        return _decide_full(b.m, b.n)
    if k == 1:
        return _decide_one(b)
    if b.is_domino_deficient:
        return _decide_domino(b)
    return _decide_nx4(b)
