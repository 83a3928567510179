"""Frozen catalog of searched tilings for the small rectangles used by the constructions.

Each catalog shape stores one tiling per symmetry orbit (under the flips and the
half turn) of every tileable deficiency.  The JSON lives next to this module and
is rebuilt by ``scripts/regen_base_cases.py``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .board import (
    Cell,
    DeficientBoard,
    Kind,
    Placement,
    SymmetryOp,
    Tiling,
    adjacent,
    apply_symmetry,
    apply_symmetry_tiling,
    map_cell,
)
from .solver import solve_exact

DATA_FILE = "base_cases.json"

_RECT_OPS = (SymmetryOp.IDENTITY, SymmetryOp.FLIP_H, SymmetryOp.FLIP_V, SymmetryOp.ROT_180)

# (rows, cols, what is removed): "domino" = every domino position, "pair" = every
# pair of cells, "cell" = every single cell, "none" = the full rectangle
CATALOG: tuple[tuple[int, int, str], ...] = (
    (2, 4, "domino"),
    (4, 5, "domino"),
    (7, 5, "domino"),
    (4, 8, "domino"),
    (4, 11, "domino"),
    (5, 7, "domino"),
    (5, 10, "domino"),
    (5, 13, "domino"),
    (5, 16, "domino"),
    (7, 8, "domino"),
    (7, 11, "domino"),
    (7, 14, "domino"),
    (10, 8, "domino"),
    (13, 8, "domino"),
    (13, 11, "domino"),
    (16, 8, "domino"),
    (8, 4, "pair"),
    (11, 4, "pair"),
    (4, 4, "cell"),
    (9, 5, "none"),
)

_TOKENS = {
    Kind.TROMINO_NE: "NE",
    Kind.TROMINO_NW: "NW",
    Kind.TROMINO_SE: "SE",
    Kind.TROMINO_SW: "SW",
    Kind.DOMINO_H: "H",
    Kind.DOMINO_V: "V",
    Kind.MONOMINO: "M",
}
_KINDS = {v: k for k, v in _TOKENS.items()}


@dataclass(frozen=True)
class BaseCaseEntry:
    board: DeficientBoard
    tiling: Tiling


def encode_placements(placements) -> str:
    return " ".join(f"{_TOKENS[p.kind]}{p.anchor.row}.{p.anchor.col}" for p in placements)


def decode_placements(text: str) -> tuple[Placement, ...]:
    out = []
    for tok in text.split():
        i = 1 if tok[0] in "HVM" else 2
        r, c = tok[i:].split(".")
        out.append(Placement(_KINDS[tok[:i]], Cell(int(r), int(c))))
    return tuple(out)


def canonical_missing(m: int, n: int, missing) -> tuple[tuple[Cell, ...], SymmetryOp]:
    """Smallest image of ``missing`` under the rectangle's symmetries, and the op reaching it."""
    best = None
    for op in _RECT_OPS:
        image = tuple(sorted(map_cell(c, m, n, op) for c in missing))
        if best is None or image < best[0]:
            best = (image, op)
    return best


def deficiencies(m: int, n: int, mode: str):
    cells = [Cell(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    if mode == "none":
        yield ()
    elif mode == "cell":
        yield from ((c,) for c in cells)
    elif mode == "pair":
        yield from combinations(cells, 2)
    else:
        yield from ((a, b) for a, b in combinations(cells, 2) if adjacent(a, b))


def generate_base_cases() -> list[BaseCaseEntry]:
    """Search every catalog entry from scratch (deterministic)."""
    out = []
    for m, n, mode in CATALOG:
        for missing in deficiencies(m, n, mode):
            rep, _ = canonical_missing(m, n, missing)
            if rep != tuple(sorted(missing)):
                continue
            b = DeficientBoard.of(m, n, missing)
            if not b.area_ok:
                continue
            t = solve_exact(b)
            if t is not None:
                out.append(BaseCaseEntry(b, t))
    return out


def dump_base_cases(entries: list[BaseCaseEntry]) -> str:
    rows = [
        {
            "rows": e.board.m,
            "cols": e.board.n,
            "missing": [list(c) for c in e.board.sorted_missing()],
            "tiling": encode_placements(e.tiling.placements),
        }
        for e in entries
    ]
    return json.dumps({"entries": rows}, indent=0) + "\n"


@lru_cache(maxsize=1)
def _load() -> dict[tuple, BaseCaseEntry]:
    text = resources.files(__package__).joinpath("data").joinpath(DATA_FILE).read_text()
    table = {}
    for row in json.loads(text)["entries"]:
        b = DeficientBoard.of(row["rows"], row["cols"], [tuple(c) for c in row["missing"]])
        table[(b.m, b.n, tuple(b.sorted_missing()))] = BaseCaseEntry(b, Tiling(b, decode_placements(row["tiling"])))
    return table


def base_case_table() -> list[BaseCaseEntry]:
    return list(_load().values())


def _lookup_direct(b: DeficientBoard) -> Tiling | None:
    rep, op = canonical_missing(b.m, b.n, b.missing)
    entry = _load().get((b.m, b.n, rep))
    if entry is None:
        return None
    return apply_symmetry_tiling(entry.tiling, op)


def lookup_base_case(b: DeficientBoard) -> Tiling | None:
    """Catalog tiling for ``b`` (in any orientation), or None."""
    t = _lookup_direct(b)
    if t is not None:
        return t
    flipped = _lookup_direct(apply_symmetry(b, SymmetryOp.TRANSPOSE))
    if flipped is not None:
        return apply_symmetry_tiling(flipped, SymmetryOp.TRANSPOSE)
    return None
