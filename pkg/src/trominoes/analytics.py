"""Closed forms, generating functions, growth rate, domino-count formula, bounds and stretching."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .board import (
    BoardError,
    Cell,
    DeficientBoard,
    Kind,
    Placement,
    Rect,
    Tiling,
    covered_cells,
    placement_from_cells,
)
from .counting import count_domino, count_mixed_split, count_tromino_plus_one_domino

# --- polynomials and rational generating functions -------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in z, coefficients in ascending powers."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, *coeffs: int) -> IntPolynomial:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        out = [0] * max(0, len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


Z = IntPolynomial.of(0, 1)
ONE = IntPolynomial.of(1)


class NonInvertibleConstantTerm(ValueError):
    pass


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self) -> None:
        if self.denominator[0] == 0:
            raise NonInvertibleConstantTerm("NONINVERTIBLE_CONSTANT_TERM: denominator vanishes at z = 0")

    def __add__(self, other: RationalGF) -> RationalGF:
        if self.denominator == other.denominator:
            return RationalGF(self.numerator + other.numerator, self.denominator)
        return RationalGF(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(self, other: RationalGF | IntPolynomial | int) -> RationalGF:
        if isinstance(other, RationalGF):
            return RationalGF(self.numerator * other.numerator, self.denominator * other.denominator)
        return RationalGF(self.numerator * other, self.denominator)

    __rmul__ = __mul__

    def series(self, terms: int) -> Series:
        return gf_series(self, terms - 1)


class Series(list):
    """Power-series coefficients; ``integral`` is False when some coefficient is not an integer."""

    integral: bool = True


def gf_series(g: RationalGF, T: int) -> Series:
    """First ``T + 1`` Taylor coefficients, from the recurrence the denominator induces."""
    den = g.denominator.coeffs
    d0 = den[0]
    out: list = []
    for k in range(T + 1):
        acc = g.numerator[k] - sum(den[i] * out[k - i] for i in range(1, min(k, len(den) - 1) + 1))
        out.append(acc // d0 if abs(d0) == 1 else Fraction(acc, d0))
    s = Series(out)
    if abs(d0) != 1:
        s.integral = all(x.denominator == 1 for x in out)
        if s.integral:
            s[:] = [int(x) for x in out]
    return s


MOORE_DENOMINATOR = IntPolynomial.of(1, -10, 22, 4)


def moore_gfs() -> tuple[RationalGF, RationalGF, RationalGF]:
    """Straight, deep-jog and shallow-jog interface generating functions for width 4."""
    D = MOORE_DENOMINATOR
    G = RationalGF(IntPolynomial.of(1, -6), D)
    G1 = RationalGF(IntPolynomial.of(0, 1, -2), D)
    G2 = RationalGF(IntPolynomial.of(0, 2), D)
    return G, G1, G2


@dataclass(frozen=True)
class DerivedGFs:
    vertical: RationalGF
    horizontal: RationalGF
    total_printed: RationalGF
    total_sum: RationalGF
    total_expanded: RationalGF


def derived_gfs() -> DerivedGFs:
    """Width-4 one-domino generating functions assembled from the interface functions."""
    G, G1, G2 = moore_gfs()
    z = Z
    vertical = 12 * z * G2 * G + 8 * G1 * G + 6 * z * G2 * G2 + 2 * G * G
    horizontal = (
        4 * (ONE + 2 * z) * G * G
        + 4 * z * (ONE + 6 * z) * G2 * G2
        + 32 * z * G1 * G2
        + 28 * z * G * G2
        + 16 * z * G * G1
    )
    expanded = (
        6 * G * G
        + 10 * z * G2 * G2
        + 32 * z * G1 * G2
        + 24 * z * z * G2 * G2
        + 40 * z * G * G2
        + 16 * z * G * G1
        + 8 * z * G * G
        + 8 * G * G1
    )
    printed = RationalGF(IntPolynomial.of(6, -56, 152, -120, 160), MOORE_DENOMINATOR * MOORE_DENOMINATOR)
    return DerivedGFs(vertical, horizontal, printed, vertical + horizontal, expanded)


def named_gfs() -> dict[str, RationalGF]:
    G, G1, G2 = moore_gfs()
    d = derived_gfs()
    return {
        "G": G,
        "G1": G1,
        "G2": G2,
        "GV": d.vertical,
        "GH": d.horizontal,
        "F": d.total_printed,
        "F_SUM": d.total_sum,
    }


def same_function(a: RationalGF, b: RationalGF) -> bool:
    return a.numerator * b.denominator == b.numerator * a.denominator


# --- the one-domino width-4 harness ----------------------------------------


def width4_mixed_counts(T: int) -> list[int]:
    """DP counts of 4 x (3t+2) tilings with one domino, t = 0..T."""
    return [count_tromino_plus_one_domino(Rect(4, 3 * t + 2)) for t in range(T + 1)]


def fit_numerator(series: Sequence[int], denominator: IntPolynomial, degree: int) -> tuple[IntPolynomial, bool]:
    """Numerator of degree <= ``degree`` matching ``series`` over ``denominator``, and whether
    the remaining known coefficients are consistent with it."""
    prod = IntPolynomial(tuple(series)) * denominator
    num = IntPolynomial(tuple(prod[k] for k in range(degree + 1)))
    consistent = all(prod[k] == 0 for k in range(degree + 1, len(series)))
    return num, consistent


@dataclass
class SeriesComparison:
    label: str
    expected: list[int]
    actual: list[int]

    @property
    def first_mismatch(self) -> int | None:
        for i, (a, b) in enumerate(zip(self.expected, self.actual)):
            if a != b:
                return i
        return None

    @property
    def matches(self) -> bool:
        return self.first_mismatch is None

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "matches": self.matches,
            "first_mismatch": self.first_mismatch,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class FHarnessReport:
    """Result of checking the closed-form one-domino generating function against exact counts."""

    T: int
    conventions: list[SeriesComparison]
    vertical: SeriesComparison
    horizontal: SeriesComparison
    printed_equals_sum: bool
    printed_equals_expansion: bool
    fitted_numerator: tuple[int, ...]
    fitted_consistent: bool
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "MATCH" if any(c.matches for c in self.conventions) else "DISCREPANCY"

    @property
    def matched_convention(self) -> str | None:
        for c in self.conventions:
            if c.matches:
                return c.label
        return None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "matched_convention": self.matched_convention,
            "terms": self.T + 1,
            "conventions": [c.to_dict() for c in self.conventions],
            "vertical": self.vertical.to_dict(),
            "horizontal": self.horizontal.to_dict(),
            "printed_equals_vertical_plus_horizontal": self.printed_equals_sum,
            "printed_equals_expanded_sum": self.printed_equals_expansion,
            "fitted_numerator": list(self.fitted_numerator),
            "fitted_numerator_consistent": self.fitted_consistent,
            "notes": self.notes,
        }


def f_harness(T: int = 6) -> FHarnessReport:
    """Compare the closed-form width-4 one-domino series with DP counts under both index conventions."""
    d = derived_gfs()
    printed = list(gf_series(d.total_printed, T + 1))
    dp = width4_mixed_counts(T + 1)
    conventions = [
        SeriesComparison("t -> R(4,3t+2), t >= 0", printed[: T + 1], dp[: T + 1]),
        SeriesComparison("t -> R(4,3t+5), t >= 0", printed[: T + 1], dp[1 : T + 2]),
    ]
    splits = [count_mixed_split(Rect(4, 3 * t + 2)) for t in range(T + 1)]
    vertical = SeriesComparison("vertical domino", list(gf_series(d.vertical, T)), [v for v, _ in splits])
    horizontal = SeriesComparison("horizontal domino", list(gf_series(d.horizontal, T)), [h for _, h in splits])
    fitted, ok = fit_numerator(dp[: T + 1], MOORE_DENOMINATOR * MOORE_DENOMINATOR, 4)
    report = FHarnessReport(
        T=T,
        conventions=conventions,
        vertical=vertical,
        horizontal=horizontal,
        printed_equals_sum=same_function(d.total_printed, d.total_sum),
        printed_equals_expansion=same_function(d.total_printed, d.total_expanded),
        fitted_numerator=fitted.coeffs,
        fitted_consistent=ok,
    )
    for c in conventions:
        if not c.matches:
            report.notes.append(f"{c.label}: first disagreement at coefficient {c.first_mismatch}")
    if vertical.matches and not horizontal.matches:
        report.notes.append("vertical part agrees; the disagreement is confined to the horizontal part")
    return report


# --- 2 x n closed forms ----------------------------------------------------


def t2_vertical(t: int) -> int:
    if t < 1:
        raise ValueError("t must be at least 1")
    return (t + 1) * 2**t


def t2_horizontal(t: int) -> int:
    if t < 1:
        raise ValueError("t must be at least 1")
    return t * 2**t


def t2_count_formula(t: int) -> int:
    """Tilings of a 2 x (3t+1) rectangle by 2t trominoes and one domino."""
    return t2_vertical(t) + t2_horizontal(t)


# --- growth constant -------------------------------------------------------


@dataclass(frozen=True)
class GrowthConstant:
    value: float
    cubic: tuple[int, int, int, int] = (1, -10, 22, 4)

    @property
    def residual(self) -> float:
        a, b, c, d = self.cubic
        x = self.value
        return ((a * x + b) * x + c) * x + d


def growth_constant(start: float = 10.0, tol: float = 1e-12) -> GrowthConstant:
    """Largest root of x^3 - 10x^2 + 22x + 4 by Newton's method."""
    x = start
    for _ in range(100):
        f = ((x - 10) * x + 22) * x + 4
        df = (3 * x - 20) * x + 22
        step = f / df
        x -= step
        if abs(step) < tol:
            break
    return GrowthConstant(x)


# --- domino counts and the upper bound -------------------------------------


def kasteleyn_count(m: int, n: int) -> tuple[int, float]:
    """Domino tilings of a 2m x 2n rectangle by the product formula.

    Returns the rounded count and the natural log of the unrounded product.
    The sum of logs is carried at a precision wide enough for exact rounding.
    """
    if m < 1 or n < 1:
        raise ValueError("half-dimensions must be positive")
    digits = int(m * n * math.log10(4)) + 30
    with mpmath.workdps(digits):
        terms = [
            mpmath.log(mpmath.cos(j * mpmath.pi / (2 * m + 1)) ** 2 + mpmath.cos(k * mpmath.pi / (2 * n + 1)) ** 2)
            for j in range(1, m + 1)
            for k in range(1, n + 1)
        ]
        logv = m * n * mpmath.log(4) + mpmath.fsum(terms)
        value = int(mpmath.nint(mpmath.exp(logv)))
    return value, float(logv)


def kasteleyn_float(m: int, n: int) -> float:
    """Unrounded product formula in double precision (pairwise-accurate summation)."""
    s = math.fsum(
        math.log(math.cos(j * math.pi / (2 * m + 1)) ** 2 + math.cos(k * math.pi / (2 * n + 1)) ** 2)
        for j in range(1, m + 1)
        for k in range(1, n + 1)
    )
    return math.exp(m * n * math.log(4) + s)


def upper_bound_domino_deficient(m: int, n: int) -> int:
    """2^((4mn-2)/3) times the smaller domino count of the two stretched rectangles."""
    if (m * n - 2) % 3:
        raise ValueError(f"AREA: 3 does not divide {m}*{n} - 2")
    return 2 ** ((4 * m * n - 2) // 3) * min(count_domino(Rect(m, 2 * n)), count_domino(Rect(2 * m, n)))


def bound_report(m: int, n: int) -> dict:
    bound = upper_bound_domino_deficient(m, n)
    count = count_tromino_plus_one_domino(Rect(m, n))
    return {"m": m, "n": n, "bound": bound, "count": count, "margin": bound - count, "holds": count <= bound}


# --- stretching ------------------------------------------------------------

RED = "RED"
BLUE = "BLUE"


def _right(d: tuple[int, int]) -> tuple[int, int]:
    # clockwise quarter turn: facing east, the right hand points south
    return d[1], -d[0]


_DIRECTION_NAMES = {(-1, 0): "N", (1, 0): "S", (0, 1): "E", (0, -1): "W"}
_DIRECTION_VECTORS = {v: k for k, v in _DIRECTION_NAMES.items()}


def split_tromino(p: Placement) -> tuple[Placement, Placement]:
    """A tromino as a directed domino plus the monomino right of its arrowhead."""
    cells = list(covered_cells(p))
    for elbow in cells:
        arms = [c for c in cells if c != elbow]
        if all(abs(a.row - elbow.row) + abs(a.col - elbow.col) == 1 for a in arms):
            break
    for tail, other in (arms, arms[::-1]):
        d = (elbow.row - tail.row, elbow.col - tail.col)
        dr, dc = _right(d)
        if (elbow.row + dr, elbow.col + dc) == other:
            dom = placement_from_cells((tail, elbow), _DIRECTION_NAMES[d])
            return dom, Placement(Kind.MONOMINO, other)
    raise AssertionError("unreachable")


def join_tromino(domino: Placement, monomino: Placement) -> Placement:
    """Inverse of :func:`split_tromino`."""
    d = _DIRECTION_VECTORS[domino.direction]
    head = max(covered_cells(domino), key=lambda c: c.row * d[0] + c.col * d[1])
    dr, dc = _right(d)
    if (head.row + dr, head.col + dc) != tuple(monomino.anchor):
        raise BoardError("monomino is not right of the arrowhead")
    return placement_from_cells(list(covered_cells(domino)) + [monomino.anchor])


def to_monodic(t: Tiling) -> Tiling:
    """Directed monodic form: every tromino split, any domino kept undirected."""
    out = []
    for p in t.placements:
        if p.kind.is_tromino:
            out.extend(split_tromino(p))
        else:
            out.append(p)
    return Tiling(t.board, tuple(out))


@dataclass(frozen=True)
class ColouredDominoTiling:
    """Domino tiling (arrows optional) of ``rect`` minus ``missing``, each tile RED or BLUE."""

    rect: Rect
    missing: frozenset[Cell]
    placements: tuple[Placement, ...]
    colours: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.placements) != len(self.colours):
            raise ValueError("one colour per placement")
        if any(not p.kind.is_domino for p in self.placements):
            raise ValueError("only dominoes allowed")
        if any(c not in (RED, BLUE) for c in self.colours):
            raise ValueError("colours are RED or BLUE")

    def key(self) -> frozenset:
        return frozenset(zip(self.placements, self.colours))

    def is_valid(self) -> bool:
        seen: set[Cell] = set()
        for p in self.placements:
            for c in covered_cells(p):
                if not self.rect.contains(c) or c in self.missing or c in seen:
                    return False
                seen.add(c)
        return len(seen) + len(self.missing) == self.rect.area


def _stretch_cell(c: Cell, axis: str) -> tuple[Cell, Cell]:
    if axis == "H":
        return Cell(c.row, 2 * c.col - 1), Cell(c.row, 2 * c.col)
    return Cell(2 * c.row - 1, c.col), Cell(2 * c.row, c.col)


def stretch_map(t: Tiling, axis: str = "H") -> ColouredDominoTiling:
    """Split trominoes, colour, then double the board along ``axis`` (H or V)."""
    axis = axis.upper()
    if axis not in ("H", "V"):
        raise ValueError("axis is H or V")
    dominoes = sum(1 for p in t.placements if p.kind.is_domino)
    if dominoes > 1 or any(p.kind is Kind.MONOMINO for p in t.placements):
        raise ValueError("BAD_INPUT: expected trominoes and at most one domino")
    m, n = t.board.m, t.board.n
    rect = Rect(m, 2 * n) if axis == "H" else Rect(2 * m, n)
    missing = frozenset(x for c in t.board.missing for x in _stretch_cell(c, axis))
    places: list[Placement] = []
    colours: list[str] = []
    for p in to_monodic(t).placements:
        if p.kind is Kind.MONOMINO:
            places.append(placement_from_cells(_stretch_cell(p.anchor, axis)))
            colours.append(BLUE)
            continue
        a, b = sorted(covered_cells(p))
        (a1, a2), (b1, b2) = _stretch_cell(a, axis), _stretch_cell(b, axis)
        along = (p.kind is Kind.DOMINO_H) == (axis == "H")
        halves = ((a1, a2), (b1, b2)) if along else ((a1, b1), (a2, b2))
        for cells in halves:
            places.append(placement_from_cells(cells, p.direction))
            colours.append(RED)
    return ColouredDominoTiling(rect, missing, tuple(places), tuple(colours))


class NotInImage(ValueError):
    pass


def _source_cell(c: Cell, axis: str) -> Cell:
    if axis == "H":
        return Cell(c.row, (c.col + 1) // 2)
    return Cell((c.row + 1) // 2, c.col)


def unstretch(c: ColouredDominoTiling, axis: str = "H") -> Tiling:
    """Compress a coloured domino tiling back to its directed monodic tiling."""
    axis = axis.upper()
    if axis == "H":
        if c.rect.cols % 2:
            raise NotInImage("NOT_IN_IMAGE: odd length along the stretch axis")
        m, n = c.rect.rows, c.rect.cols // 2
    else:
        if c.rect.rows % 2:
            raise NotInImage("NOT_IN_IMAGE: odd length along the stretch axis")
        m, n = c.rect.rows // 2, c.rect.cols
    missing = set()
    for cell in c.missing:
        src = _source_cell(cell, axis)
        if not set(_stretch_cell(src, axis)) <= c.missing:
            raise NotInImage("NOT_IN_IMAGE: missing cells do not come in stretched pairs")
        missing.add(src)
    if len(missing) > 2:
        raise NotInImage("NOT_IN_IMAGE: too many missing cells")
    out: list[Placement] = []
    red: dict[Cell, Placement] = {}
    for p, colour in zip(c.placements, c.colours):
        cells = sorted(covered_cells(p))
        srcs = {_source_cell(x, axis) for x in cells}
        if colour == BLUE:
            if len(srcs) != 1 or p.direction is not None:
                raise NotInImage("NOT_IN_IMAGE: blue domino straddles two source cells")
            out.append(Placement(Kind.MONOMINO, srcs.pop()))
        else:
            red[cells[0]] = p
    used: set[Cell] = set()
    for first in sorted(red):
        if first in used:
            continue
        p = red[first]
        cells = sorted(covered_cells(p))
        srcs = sorted({_source_cell(x, axis) for x in cells})
        if len(srcs) == 1:
            # lies along the axis: its partner continues the run
            step = (0, 2) if axis == "H" else (2, 0)
        else:
            step = (0, 1) if axis == "H" else (1, 0)
        partner_at = Cell(first.row + step[0], first.col + step[1])
        q = red.get(partner_at)
        if q is None or q in used or q.kind is not p.kind or q.direction != p.direction:
            raise NotInImage(f"NOT_IN_IMAGE: red domino at {tuple(first)} has no stretched partner")
        pair_srcs = sorted({_source_cell(x, axis) for x in list(covered_cells(p)) + list(covered_cells(q))})
        if len(pair_srcs) != 2 or set(_stretch_cell(pair_srcs[0], axis)) | set(_stretch_cell(pair_srcs[1], axis)) != (
            covered_cells(p) | covered_cells(q)
        ):
            raise NotInImage(f"NOT_IN_IMAGE: red pair at {tuple(first)} is not a stretched domino")
        used.update((first, partner_at))
        out.append(placement_from_cells(pair_srcs, p.direction))
    board = DeficientBoard.of(m, n, missing)
    return Tiling(board, tuple(sorted(out)))


def from_monodic(t: Tiling) -> Tiling:
    """Reattach each directed domino to the monomino right of its arrowhead."""
    monos = {p.anchor: p for p in t.placements if p.kind is Kind.MONOMINO}
    out = []
    for p in t.placements:
        if p.kind.is_domino and p.direction is not None:
            d = _DIRECTION_VECTORS[p.direction]
            head = max(covered_cells(p), key=lambda c: c.row * d[0] + c.col * d[1])
            dr, dc = _right(d)
            mono = monos.pop(Cell(head.row + dr, head.col + dc), None)
            if mono is None:
                raise NotInImage("NOT_IN_IMAGE: arrowhead has no monomino on its right")
            out.append(join_tromino(p, mono))
        elif p.kind.is_domino:
            out.append(p)
    if monos:
        raise NotInImage("NOT_IN_IMAGE: unattached monominoes")
    return Tiling(t.board, tuple(sorted(out)))


def non_image_example() -> ColouredDominoTiling:
    """A 3 x 4 domino tiling that no 3 x 2 tiling stretches to."""
    ps = (
        Placement(Kind.DOMINO_V, Cell(1, 1)),
        Placement(Kind.DOMINO_H, Cell(1, 2)),
        Placement(Kind.DOMINO_V, Cell(1, 4)),
        Placement(Kind.DOMINO_H, Cell(2, 2)),
        Placement(Kind.DOMINO_H, Cell(3, 1)),
        Placement(Kind.DOMINO_H, Cell(3, 3)),
    )
    return ColouredDominoTiling(Rect(3, 4), frozenset(), ps, (RED,) * 6)
