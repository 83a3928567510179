"""Bad-pair tables that are stated as literal data rather than by formula.

Both were produced by exhaustive exact-cover search (``scripts/regen_tables.py``)
and are checked against a fresh search by ``tests/test_tables.py``.
"""

# Every bad domino position of the 4x5 rectangle.
R4X5_BAD = (
    ((1, 2), (2, 2)),
    ((1, 3), (2, 3)),
    ((1, 4), (2, 4)),
    ((2, 1), (2, 2)),
    ((2, 2), (2, 3)),
    ((2, 3), (2, 4)),
    ((2, 3), (3, 3)),
    ((2, 4), (2, 5)),
    ((3, 1), (3, 2)),
    ((3, 2), (3, 3)),
    ((3, 2), (4, 2)),
    ((3, 3), (3, 4)),
    ((3, 3), (4, 3)),
    ((3, 4), (3, 5)),
    ((3, 4), (4, 4)),
)

# Seven of the 4x5 pairs, kept as their own subset of R4X5_BAD.
R4X5_NAMED = (
    ((2, 2), (2, 3)),
    ((2, 3), (2, 4)),
    ((3, 2), (3, 3)),
    ((3, 3), (3, 4)),
    ((1, 3), (2, 3)),
    ((3, 3), (4, 3)),
    ((2, 3), (3, 3)),
)

# Non-adjacent bad pairs of the 8x4 rectangle.  The first sixteen lie in rows
# 1-4, the rest are their mirror images in rows 5-8.
R8X4_NONADJACENT_BAD = (
    ((1, 1), (2, 2)),
    ((1, 2), (2, 1)),
    ((1, 2), (3, 3)),
    ((1, 3), (2, 4)),
    ((1, 3), (3, 2)),
    ((1, 4), (2, 3)),
    ((2, 1), (3, 3)),
    ((2, 2), (3, 3)),
    ((2, 3), (3, 2)),
    ((2, 4), (3, 2)),
    ((3, 2), (4, 1)),
    ((3, 2), (4, 3)),
    ((3, 2), (4, 4)),
    ((3, 3), (4, 1)),
    ((3, 3), (4, 2)),
    ((3, 3), (4, 4)),
    ((5, 1), (6, 2)),
    ((5, 1), (6, 3)),
    ((5, 2), (6, 3)),
    ((5, 3), (6, 2)),
    ((5, 4), (6, 2)),
    ((5, 4), (6, 3)),
    ((6, 2), (7, 3)),
    ((6, 2), (7, 4)),
    ((6, 2), (8, 3)),
    ((6, 3), (7, 1)),
    ((6, 3), (7, 2)),
    ((6, 3), (8, 2)),
    ((7, 1), (8, 2)),
    ((7, 2), (8, 1)),
    ((7, 3), (8, 4)),
    ((7, 4), (8, 3)),
)
