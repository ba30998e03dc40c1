"""Frozen reference data for the worked examples.

Vectors are stored by support (all recorded coordinates are 0 or 1);
words are in display order (leftmost letter first).  ``cmd_examples``
regenerates each dataset from scratch and diffs against these tables.
"""

from __future__ import annotations

# -- small A3 example: two reduced words of w0 ------------------------------

A3_WDOT = (2, 1, 2, 3, 2, 1)
A3_W0DOT = (1, 2, 3, 1, 2, 1)

# per k: (own-vector of wdot, own-vector of w0dot, wdot seen in w0dot,
#         w0dot seen in wdot), as supports
A3_TABLE = {
    1: ((1,), (1,), (1,), (1,)),
    2: ((2,), (2,), (2,), (2,)),
    3: ((3,), (1, 3), (4,), (1, 6)),
    4: ((2, 4), (4,), (2, 6), (3,)),
    5: ((1, 5), (2, 5), (1, 3, 6), (2, 4, 6)),
    6: ((2, 4, 6), (1, 3, 6), (2, 5), (1, 5)),
}

# -- A4 initial quiver -------------------------------------------------------

A4_WORD = (3, 4, 2, 3, 1, 2, 4, 1)
A4_ARROWS = {
    (1, 4), (2, 7), (3, 6), (5, 8),
    (4, 3), (6, 4), (6, 5), (3, 1), (8, 6), (8, 7), (5, 3), (5, 2), (7, 5),
}

# -- D5 initial quiver with the three-teeth bicolor subquiver ---------------

D5_WORD = (4, 3, 5, 2, 3, 4, 1, 2, 3, 5, 3, 4, 1, 2, 3, 1, 2)
D5_ARROWS = {
    (11, 10), (5, 11), (5, 4), (2, 5), (2, 1),
    (14, 11), (14, 13), (10, 5), (10, 9), (10, 14), (4, 10), (4, 2), (4, 3), (1, 4),
    (16, 14), (16, 12), (16, 15), (13, 10), (13, 8), (13, 16),
    (9, 13), (9, 4), (9, 6), (7, 9), (3, 7), (3, 1),
    (17, 16), (12, 17), (12, 9), (6, 12), (6, 3), (15, 13), (8, 15), (8, 7),
}
D5_BICOLOR_32 = {
    "teeth": ((3, 4, 9), (9, 10, 13), (13, 14, 16)),
    "initial_barb": (3, 1),
    "final_barb": None,
    "pure": False,
    "isolated": (),
}

# -- D5 notations table ------------------------------------------------------

D5_NOTATIONS_WORD = (2, 3, 4, 1, 2, 3, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1)
D5_NOTATIONS_POSITIONS = (2, 4, 7, 8, 11, 12, 13, 14, 15, 16)
# per k: (m, i_k, f_min, f, m_oplus, beta, gamma); None marks empty cells
D5_NOTATIONS_ROWS = {
    1: (None, 1, 8, 0, None, None, None),
    2: (1, 2, 1, 1, 7, 0, 1),
    3: (None, 1, 8, 0, None, None, None),
    4: (2, 3, 2, 2, 4, 0, 1),
    5: (None, 2, 1, 1, None, None, None),
    6: (None, 1, 8, 0, None, None, None),
    7: (3, 4, 3, 3, 9, 0, 1),
    8: (4, 3, 2, 4, 6, 0, 2),
    9: (None, 2, 1, 1, None, None, None),
    10: (None, 1, 8, 0, None, None, None),
    11: (5, 5, 5, 5, 18, 0, 1),
    12: (6, 3, 2, 6, 10, 0, 3),
    13: (7, 2, 1, 7, 18, 2, 2),
    14: (8, 1, 8, 8, 18, 4, 1),
    15: (9, 4, 3, 9, 18, 0, 2),
    16: (10, 3, 2, 10, 18, 0, 4),
    17: (None, 2, 1, 7, None, None, None),
}

# -- the full A5 run ---------------------------------------------------------

A5_WORD = (1, 3, 2, 4, 3, 2, 4, 5, 4, 3, 2, 1, 2)
A5_V_WORD = (2, 4, 5, 3, 1, 2)
A5_POSITIONS = (1, 2, 4, 6, 7, 8)
A5_BETA = (0, 0, 0, 0, 1, 1)
A5_GAMMA = (1, 1, 1, 1, 1, 2)
# the completion used by the tables below; the rightmost six letters
# spell the subword for v
A5_VDOT = (2, 3, 4, 5, 4, 1, 2, 3, 1, 2, 4, 5, 3, 1, 2)
A5_SCHEDULE = ((1, 3, 8), (2,), (4, 9), (), (7,), (3,))
A5_DELETED = (6, 8, 10, 11, 12, 13)
A5_SURVIVORS = (1, 2, 3, 4, 5, 7, 9)
A5_FROZEN = (2, 3, 5, 7, 9)
# survivor arrows once frozen-frozen arrows are dropped
A5_FINAL_ARROWS = {(1, 7), (3, 4), (4, 9), (5, 1), (7, 4)}

# vector supports per summand, before the run and after batches 1,2,3,5,6
A5_DELTAS = {
    0: {1: (1,), 2: (2,), 3: (1, 11), 4: (3, 11), 5: (12,), 6: (4, 12),
        7: (5, 11), 8: (1, 6), 9: (3, 8), 10: (5, 11, 13), 11: (1, 6, 10),
        12: (3, 8, 15), 13: (2, 7, 10)},
    1: {1: (11,), 2: (2,), 3: (6,), 4: (3, 11), 5: (12,), 6: (4, 12),
        7: (5, 11), 8: (6, 10), 9: (3, 8), 10: (5, 11, 13), 11: (1, 6, 10),
        12: (3, 8, 15), 13: (2, 7, 10)},
    2: {1: (11,), 2: (7, 10), 3: (6,), 4: (3, 11), 5: (12,), 6: (4, 12),
        7: (5, 11), 8: (6, 10), 9: (3, 8), 10: (5, 11, 13), 11: (1, 6, 10),
        12: (3, 8, 15), 13: (2, 7, 10)},
    3: {1: (11,), 2: (7, 10), 3: (6,), 4: (8,), 5: (12,), 6: (4, 12),
        7: (5, 11), 8: (6, 10), 9: (8, 15), 10: (5, 11, 13), 11: (1, 6, 10),
        12: (3, 8, 15), 13: (2, 7, 10)},
    5: {1: (11,), 2: (7, 10), 3: (6,), 4: (8,), 5: (12,), 6: (4, 12),
        7: (11, 13), 8: (6, 10), 9: (8, 15), 10: (5, 11, 13), 11: (1, 6, 10),
        12: (3, 8, 15), 13: (2, 7, 10)},
    6: {1: (11,), 2: (7, 10), 3: (10,), 4: (8,), 5: (12,), 6: (4, 12),
        7: (11, 13), 8: (6, 10), 9: (8, 15), 10: (5, 11, 13), 11: (1, 6, 10),
        12: (3, 8, 15), 13: (2, 7, 10)},
}

# a few single exchanges of the first batch, per summand:
# (chosen branch, chosen support)
A5_FIRST_BATCH_CHOICES = {
    1: ("out", (11,)),
    3: ("out", (6,)),
    8: ("out", (6, 10)),
}

# full arrow sets of the quiver after batches 1, 2, 3, 5 and 6
A5_QUIVERS = {
    1: {(2, 13), (4, 9), (9, 12), (5, 7), (7, 10), (7, 4), (6, 5), (10, 6),
        (9, 7), (10, 9), (12, 10), (12, 11), (13, 11), (1, 3), (4, 1), (3, 4),
        (3, 8), (8, 2), (11, 8), (8, 9), (9, 3)},
    2: {(1, 3), (13, 2), (3, 8), (4, 9), (5, 7), (7, 10), (9, 12), (11, 8),
        (4, 1), (2, 8), (9, 3), (3, 4), (7, 4), (6, 5), (10, 6), (9, 7),
        (8, 9), (10, 9), (12, 10), (12, 11), (13, 11), (8, 13)},
    3: {(13, 2), (3, 8), (4, 9), (5, 7), (7, 10), (12, 9), (11, 8), (1, 4),
        (2, 8), (4, 3), (4, 7), (6, 5), (10, 6), (9, 8), (9, 10), (12, 11),
        (13, 11), (8, 13), (7, 1), (8, 4), (8, 12), (10, 4)},
    5: {(13, 2), (3, 8), (4, 9), (7, 5), (10, 7), (12, 9), (11, 8), (2, 8),
        (4, 3), (7, 4), (6, 5), (10, 6), (9, 8), (9, 10), (12, 11), (13, 11),
        (8, 13), (1, 7), (8, 4), (8, 12), (5, 10), (5, 1)},
    6: {(13, 2), (8, 3), (4, 9), (7, 5), (10, 7), (12, 9), (11, 8), (2, 8),
        (3, 4), (7, 4), (6, 5), (10, 6), (9, 8), (9, 10), (12, 11), (13, 11),
        (8, 13), (1, 7), (8, 12), (5, 10), (5, 1)},
}
