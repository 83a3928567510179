"""Cross-checks between independent routes, collected into one JSON-ready report."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .analytics import (
    f_harness,
    gf_series,
    growth_constant,
    kasteleyn_count,
    moore_gfs,
    stretch_map,
    t2_count_formula,
    upper_bound_domino_deficient,
)
from .board import Cell, DeficientBoard, Rect, validate_tiling
from .characterize import bad_pairs_4xN, bad_pairs_5xN, bad_pairs_general, decide, domino_positions
from .construct import construct_tiling
from .counting import (
    InterfaceKind,
    count_domino,
    count_interface,
    count_mixed_by_positions,
    count_tromino,
    count_tromino_plus_one_domino,
    enumerate_tilings,
)
from .solver import is_tileable

GROWTH_DIGITS = "6.54560770847481152029"


@dataclass
class Check:
    id: str
    scope: dict
    passed: bool
    lhs: object = None
    rhs: object = None


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, id: str, scope: dict, lhs, rhs, passed: bool | None = None) -> Check:
        c = Check(id, scope, lhs == rhs if passed is None else passed, lhs, rhs)
        self.checks.append(c)
        return c

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [asdict(c) for c in self.checks]}


def oracle_disagreements(m: int, n: int) -> list[tuple[Cell, Cell]]:
    """Domino positions of ``m x n`` where the characterization and the search disagree."""
    out = []
    for a, b in domino_positions(m, n):
        board = DeficientBoard.of(m, n, (a, b))
        if decide(board).tileable != is_tileable(board):
            out.append((a, b))
    return out


def pair_disagreements(m: int) -> list[tuple[Cell, Cell]]:
    """Every cell pair of ``m x 4`` where the characterization and the search disagree."""
    cells = [Cell(r, c) for r in range(1, m + 1) for c in range(1, 5)]
    out = []
    for a, b in combinations(cells, 2):
        board = DeficientBoard.of(m, 4, (a, b))
        if board.area_ok and decide(board).tileable != is_tileable(board):
            out.append((a, b))
    return out


def oracle_bad_pairs(m: int, n: int) -> set[frozenset[Cell]]:
    return {
        frozenset((Cell(*a), Cell(*b)))
        for a, b in domino_positions(m, n)
        if not is_tileable(DeficientBoard.of(m, n, (a, b)))
    }


def random_tileable_boards(count: int, max_rows: int, max_cols: int, seed: int = 0):
    rng = random.Random(seed)
    made = 0
    while made < count:
        m, n = rng.randint(1, max_rows), rng.randint(1, max_cols)
        if (m * n - 2) % 3:
            continue
        cells = list(domino_positions(m, n))
        if not cells:
            continue
        b = DeficientBoard.of(m, n, rng.choice(cells))
        if decide(b).tileable:
            made += 1
            yield b


def run_all(quick: bool = False) -> VerifyReport:
    rep = VerifyReport()
    for n in (4, 7, 10, 13):
        rep.add("direc_oracle", {"m": 2, "n": n}, oracle_disagreements(2, n), [])
    for t in range(1, 11):
        rep.add("t2_formula", {"t": t}, count_tromino_plus_one_domino(Rect(2, 3 * t + 1)), t2_count_formula(t))
    for n in (8, 11) if quick else (8, 11, 14):
        rep.add("quadrec_oracle", {"m": 4, "n": n}, oracle_disagreements(4, n), [])
    rep.add("quadrec_size", {"n": 8}, len(bad_pairs_4xN(8)), 14)
    G, G1, G2 = moore_gfs()
    rep.add("width4_straight_series", {"T": 6}, list(gf_series(G, 6)), [count_tromino(DeficientBoard.of(4, 3 * t)) if t else 1 for t in range(7)])
    for kind, g in ((InterfaceKind.DEEP_JOG, G1), (InterfaceKind.SHALLOW_JOG, G2)):
        rep.add("width4_jog_series", {"kind": kind.value, "T": 6}, list(gf_series(g, 6)), [count_interface(kind, t) for t in range(7)])
    h = f_harness(6)
    rep.add("f_harness_reported", {"T": 6}, h.status, h.to_dict(), passed=h.status in ("MATCH", "DISCREPANCY"))
    for m, n in ((5, 7), (5, 10)) if quick else ((5, 7), (5, 10), (5, 13)):
        rep.add("pentrec_oracle", {"m": m, "n": n}, oracle_disagreements(m, n), [])
    rep.add("pentrec_size", {"n": 10}, len(bad_pairs_5xN(10)), 18)
    for m, n in ((7, 8),) if quick else ((7, 8), (7, 11), (10, 8)):
        rep.add("large_rect_oracle", {"m": m, "n": n}, oracle_disagreements(m, n), [])
        rep.add("large_rect_size", {"m": m, "n": n}, len(bad_pairs_general(m, n)), 16)
    bad = [str(b) for b in random_tileable_boards(50 if quick else 200, 61, 62) if not validate_tiling(construct_tiling(b))]
    rep.add("construct_sound", {"boards": 50 if quick else 200, "max": "61x62"}, bad, [])
    for m in (8,) if quick else (8, 11):
        rep.add("nx4_oracle", {"m": m}, pair_disagreements(m), [])
    g = growth_constant()
    rep.add("growth_digits", {"places": 12}, f"{g.value:.12f}", f"{float(GROWTH_DIGITS):.12f}")
    rep.add("growth_residual", {}, abs(g.residual), 1e-9, passed=abs(g.residual) < 1e-9)
    for m in range(1, 7):
        for n in range(1, 7):
            rep.add("product_formula", {"rows": 2 * m, "cols": 2 * n}, kasteleyn_count(m, n)[0], count_domino(Rect(2 * m, 2 * n)))
    for m in range(1, 9):
        for n in range(1, 9):
            if (m * n - 2) % 3 == 0:
                lhs = count_tromino_plus_one_domino(Rect(m, n))
                rhs = upper_bound_domino_deficient(m, n)
                rep.add("upper_bound", {"m": m, "n": n}, lhs, rhs, passed=lhs <= rhs)
    for m, n in ((2, 4), (2, 7), (4, 5)):
        tilings = enumerate_tilings(DeficientBoard.of(m, n), dominoes=1)
        for axis in ("H", "V"):
            images = {stretch_map(t, axis).key() for t in tilings}
            rep.add("stretch_injective", {"m": m, "n": n, "axis": axis}, len(images), len(tilings))
    for m, n in ((2, 4), (4, 5), (5, 4)):
        rep.add("mixed_by_positions", {"m": m, "n": n}, count_mixed_by_positions(Rect(m, n)), count_tromino_plus_one_domino(Rect(m, n)))
    return rep
