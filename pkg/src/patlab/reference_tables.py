"""
Known reference rows used by the cross-validation suites.

Transcribed literally from the published tables this library reproduces;
the conformance machinery compares computed values against these rows and
flags any disagreement rather than silently matching. Two independently
reported oddities are preserved as-is so the checks can surface them: the
`u` source table's caption carries a stray sign on its argument (the rows
themselves are plain u_n(y)), and rows 12/14 of the 142536 table break the
sign alternation seen everywhere else.
"""
from __future__ import annotations

from .polynomials import XYPoly, YPoly

# u_n(y) rows for the pattern pair {14253, 15243}, n = 1..10.
_U_14253_15243 = {
    1: {1: -1},
    2: {1: -1, 2: 1},
    3: {1: -1, 2: 2, 3: -1},
    4: {1: -1, 2: 3, 3: -3, 4: 1},
    5: {1: -1, 2: 4, 3: -4, 4: 4, 5: -1},
    6: {1: -1, 2: 5, 3: -2, 4: 2, 5: -5, 6: 1},
    7: {1: -1, 2: 6, 3: 5, 4: -28, 5: 5, 6: 6, 7: -1},
    8: {1: -1, 2: 7, 3: 19, 4: -123, 5: 123, 6: -19, 7: -7, 8: 1},
    9: {1: -1, 2: 8, 3: 42, 4: -334, 5: 588, 6: -334, 7: 42, 8: 8, 9: -1},
    10: {1: -1, 2: 9, 3: 76, 4: -726, 5: 1606, 6: -1606, 7: 726, 8: -76, 9: -9, 10: 1},
}

# Weight polynomials NM_n(x, y) for {14253, 15243}, n = 1..7, keyed (xexp, yexp).
_NM_14253_15243 = {
    1: {(1, 1): 1},
    2: {(1, 1): 1, (2, 2): 1},
    3: {(1, 1): 1, (1, 2): 1, (2, 2): 3, (3, 3): 1},
    4: {(1, 1): 1, (1, 2): 4, (2, 2): 7, (1, 3): 1, (2, 3): 4, (3, 3): 6, (4, 4): 1},
    5: {(1, 1): 1, (1, 2): 11, (2, 2): 15, (1, 3): 9, (2, 3): 30, (3, 3): 25,
        (1, 4): 1, (2, 4): 5, (3, 4): 10, (4, 4): 10, (5, 5): 1},
    6: {(1, 1): 1, (1, 2): 26, (2, 2): 31, (1, 3): 58, (2, 3): 146, (3, 3): 90,
        (1, 4): 22, (2, 4): 79, (3, 4): 120, (4, 4): 65,
        (1, 5): 1, (2, 5): 6, (3, 5): 15, (4, 5): 20, (5, 5): 15, (6, 6): 1},
    7: {(1, 1): 1, (1, 2): 57, (2, 2): 63, (1, 3): 282, (2, 3): 588, (3, 3): 301,
        (1, 4): 252, (2, 4): 770, (3, 4): 896, (4, 4): 350,
        (1, 5): 51, (2, 5): 210, (3, 5): 364, (4, 5): 350, (5, 5): 140,
        (1, 6): 1, (2, 6): 7, (3, 6): 21, (4, 6): 35, (5, 6): 35, (6, 6): 21,
        (7, 7): 1},
}

# u_n(y) rows for the single pattern 142536, n = 1..14, signs exactly as printed.
_U_142536 = {
    1: {1: -1},
    2: {1: -1, 2: 1},
    3: {1: -1, 2: 2, 3: -1},
    4: {1: -1, 2: 3, 3: -3, 4: 1},
    5: {1: -1, 2: 4, 3: -6, 4: 4, 5: -1},
    6: {1: -1, 2: 5, 3: -9, 4: 10, 5: -5, 6: 1},
    7: {1: -1, 2: 6, 3: -13, 4: 18, 5: -15, 6: 6, 7: -1},
    8: {1: -1, 2: 7, 3: -18, 4: 27, 5: -32, 6: 21, 7: -7, 8: 1},
    9: {1: -1, 2: 8, 3: -24, 4: 40, 5: -54, 6: 52, 7: -28, 8: 8, 9: -1},
    10: {1: -1, 2: 9, 3: -31, 4: 58, 5: -85, 6: 100, 7: -79, 8: 36, 9: -9, 10: 1},
    11: {1: -1, 2: 10, 3: -39, 4: 82, 5: -129, 6: 170, 7: -172, 8: 114,
         9: -45, 10: 10, 11: -1},
    12: {1: -1, 2: 11, 3: -48, 4: 113, 5: -191, 6: 289, 7: -320, 8: 278,
         9: -158, 10: 55, 11: -11, 12: 1},
    13: {1: -1, 2: 12, 3: -58, 4: 152, 5: -277, 6: 456, 7: -578, 8: 568,
         9: -427, 10: 212, 11: -66, 12: 12, 13: -1},
    14: {1: -1, 2: 13, 3: -69, 4: 200, 5: -394, 6: 689, 7: -1031, 8: 1068,
         9: 956, 10: 629, 11: -277, 12: 78, 13: -13, 14: 1},
}

U_TABLE_14253_15243: dict[int, YPoly] = {n: YPoly(row) for n, row in _U_14253_15243.items()}
NM_TABLE_14253_15243: dict[int, XYPoly] = {n: XYPoly(row) for n, row in _NM_14253_15243.items()}
U_TABLE_142536: dict[int, YPoly] = {n: YPoly(row) for n, row in _U_142536.items()}
