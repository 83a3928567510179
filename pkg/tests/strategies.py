from hypothesis import strategies as st

from trominoes.board import Cell, DeficientBoard


@st.composite
def boards(draw, max_side=9, max_missing=2):
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    cells = [Cell(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    k = draw(st.integers(0, min(max_missing, len(cells))))
    missing = draw(st.lists(st.sampled_from(cells), min_size=k, max_size=k, unique=True))
    return DeficientBoard.of(m, n, missing)


@st.composite
def domino_boards(draw, min_side=1, max_side=9, area_ok=True):
    dims = [
        (m, n)
        for m in range(min_side, max_side + 1)
        for n in range(min_side, max_side + 1)
        if m * n >= 2 and (not area_ok or (m * n - 2) % 3 == 0)
    ]
    m, n = draw(st.sampled_from(dims))
    horizontal = draw(st.booleans()) if m > 1 and n > 1 else n > 1
    if horizontal:
        r, c = draw(st.integers(1, m)), draw(st.integers(1, n - 1))
        return DeficientBoard.of(m, n, [(r, c), (r, c + 1)])
    r, c = draw(st.integers(1, m - 1)), draw(st.integers(1, n))
    return DeficientBoard.of(m, n, [(r, c), (r + 1, c)])
