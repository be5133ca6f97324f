"""Frozen golden data for the test suite.

Tree figures, the generator/degree matrix table, the worked singularity
examples and the classification series data.  Two entries of the published
matrix table contain one-character misprints (marked below); the corrected
matrices are the unique ones passing the correspondence test, and the tests
pin the corrected values.
"""

# ---------------------------------------------------------------------------
# Mutation tree figures: (parameter, depth) -> nodes, edges
# ---------------------------------------------------------------------------

TREE_FIGURES = {
    9: {
        "depth": 4,
        "nodes": [
            (1, 1, 1), (1, 1, 4), (1, 4, 25), (1, 25, 169), (4, 25, 841),
            (1, 169, 1156), (25, 169, 37636), (25, 841, 187489), (4, 841, 28561),
        ],
        "edges": [
            ((1, 1, 1), (1, 1, 4)),
            ((1, 1, 4), (1, 4, 25)),
            ((1, 4, 25), (1, 25, 169)),
            ((1, 4, 25), (4, 25, 841)),
            ((1, 25, 169), (1, 169, 1156)),
            ((1, 25, 169), (25, 169, 37636)),
            ((4, 25, 841), (25, 841, 187489)),
            ((4, 25, 841), (4, 841, 28561)),
        ],
    },
    8: {
        "depth": 3,
        "nodes": [
            (1, 1, 2), (1, 2, 9), (1, 9, 50), (2, 9, 121),
            (1, 50, 289), (9, 50, 3481), (2, 121, 1681), (9, 121, 8450),
        ],
        "edges": [
            ((1, 1, 2), (1, 2, 9)),
            ((1, 2, 9), (1, 9, 50)),
            ((1, 2, 9), (2, 9, 121)),
            ((1, 9, 50), (1, 50, 289)),
            ((1, 9, 50), (9, 50, 3481)),
            ((2, 9, 121), (2, 121, 1681)),
            ((2, 9, 121), (9, 121, 8450)),
        ],
    },
    6: {
        "depth": 3,
        "nodes": [
            (1, 2, 3), (2, 3, 25), (1, 3, 8),
            (3, 25, 392), (2, 25, 243), (3, 8, 121), (1, 8, 27),
            (1, 27, 98), (8, 27, 1225), (3, 121, 1922), (8, 121, 5547),
            (2, 243, 2401), (25, 243, 35912), (3, 392, 6241), (25, 392, 57963),
        ],
        "edges": [
            ((1, 2, 3), (2, 3, 25)),
            ((1, 2, 3), (1, 3, 8)),
            ((2, 3, 25), (3, 25, 392)),
            ((2, 3, 25), (2, 25, 243)),
            ((1, 3, 8), (3, 8, 121)),
            ((1, 3, 8), (1, 8, 27)),
            ((1, 8, 27), (1, 27, 98)),
            ((1, 8, 27), (8, 27, 1225)),
            ((3, 8, 121), (3, 121, 1922)),
            ((3, 8, 121), (8, 121, 5547)),
            ((2, 25, 243), (2, 243, 2401)),
            ((2, 25, 243), (25, 243, 35912)),
            ((3, 25, 392), (3, 392, 6241)),
            ((3, 25, 392), (25, 392, 57963)),
        ],
    },
    5: {
        "depth": 3,
        "nodes": [
            (1, 4, 5), (1, 5, 9), (4, 5, 81),
            (1, 9, 20), (5, 9, 196), (4, 81, 1445), (5, 81, 1849),
            (1, 20, 49), (9, 20, 841), (5, 196, 4489), (9, 196, 8405),
            (4, 1445, 25921), (81, 1445, 582169), (5, 1849, 42436), (81, 1849, 744980),
        ],
        "edges": [
            ((1, 4, 5), (1, 5, 9)),
            ((1, 4, 5), (4, 5, 81)),
            ((1, 5, 9), (1, 9, 20)),
            ((1, 5, 9), (5, 9, 196)),
            ((4, 5, 81), (4, 81, 1445)),
            ((4, 5, 81), (5, 81, 1849)),
            ((5, 81, 1849), (81, 1849, 744980)),
            ((5, 81, 1849), (5, 1849, 42436)),
            ((4, 81, 1445), (81, 1445, 582169)),
            ((4, 81, 1445), (4, 1445, 25921)),
            ((5, 9, 196), (9, 196, 8405)),
            ((5, 9, 196), (5, 196, 4489)),
            ((1, 9, 20), (9, 20, 841)),
            ((1, 9, 20), (1, 20, 49)),
        ],
    },
}

# ---------------------------------------------------------------------------
# Initial triples per parameter
# ---------------------------------------------------------------------------

INITIAL_TRIPLES = {
    9: {(1, 1, 1)},
    8: {(1, 1, 2)},
    6: {(1, 2, 3)},
    5: {(1, 4, 5)},
    4: {(2, 2, 4)},
    3: {(3, 3, 3), (2, 4, 6)},
    2: {(4, 4, 8), (3, 6, 9)},
    1: {(9, 9, 9), (8, 8, 16), (6, 12, 18), (5, 20, 25)},
}

# ---------------------------------------------------------------------------
# The published table of corresponding (generator, degree matrix) pairs for
# the planes with an initial fake weight vector: 21 pairs of
# (generator rows, mu, u, eta).  Corrections to misprints:
#   * degree 3, mu 3: top-right entry reads -1 in print, must be -2
#     (as printed the columns are collinear);
#   * degree 2, mu 4, eta 3: top-right entry reads -3 in print, must be -2
#     (as printed the fake weights are (7,5,8), not (4,4,8)).
# ---------------------------------------------------------------------------

MATRIX_TABLE = [
    (((1, 1, -2), (0, 1, -1)), 1, (1, 1, 1), (0, 0, 0)),
    (((1, 1, -1), (0, -2, 1)), 1, (1, 1, 2), (0, 0, 0)),
    (((1, 1, -1), (0, -3, 2)), 1, (1, 2, 3), (0, 0, 0)),
    (((1, 1, -1), (0, -5, 4)), 1, (1, 4, 5), (0, 0, 0)),
    (((1, 1, -1), (0, -4, 2)), 2, (1, 1, 2), (0, 1, 1)),
    (((1, 1, -2), (0, -3, 3)), 3, (1, 1, 1), (0, 1, 2)),  # corrected
    (((1, 1, -1), (0, -6, 4)), 2, (1, 2, 3), (0, 1, 1)),
    (((1, 1, -1), (0, -8, 4)), 4, (1, 1, 2), (0, 1, 1)),
    (((2, 2, -2), (1, -3, 1)), 4, (1, 1, 2), (0, 1, 3)),  # corrected
    (((1, 1, -1), (0, -9, 6)), 3, (1, 2, 3), (0, 1, 1)),
    (((3, 3, -3), (1, -2, 1)), 3, (1, 2, 3), (0, 1, 2)),
    (((3, 3, -6), (1, -2, 1)), 9, (1, 1, 1), (0, 1, 2)),
    (((1, 1, -1), (0, -16, 8)), 8, (1, 1, 2), (0, 1, 1)),
    (((4, 4, -4), (1, -3, 1)), 8, (1, 1, 2), (0, 1, 3)),
    (((2, 2, -2), (1, -7, 3)), 8, (1, 1, 2), (0, 1, 5)),
    (((1, 1, -1), (0, -18, 12)), 6, (1, 2, 3), (0, 1, 1)),
    (((3, 3, -3), (2, -4, 2)), 6, (1, 2, 3), (0, 1, 5)),
    (((1, 1, -1), (0, -25, 20)), 5, (1, 4, 5), (0, 1, 1)),
    (((5, 5, -5), (3, -2, 1)), 5, (1, 4, 5), (0, 1, 2)),
    (((5, 5, -5), (1, -4, 3)), 5, (1, 4, 5), (0, 1, 3)),
    (((5, 5, -5), (2, -3, 2)), 5, (1, 4, 5), (0, 1, 4)),
]

# ---------------------------------------------------------------------------
# Worked singularity examples: per shared fake weight vector a list of
# members (eta, printed generator rows, iota triple, T flags, curve counts)
# plus the isomorphism verdicts among them as sorted index pairs.
# ---------------------------------------------------------------------------

WORKED_EXAMPLES = [
    {
        "mu": 9,
        "u": (1, 1, 1),
        "members": [
            (2, ((3, 3, -6), (1, -2, 1)), (3, 1, 3), (True, True, True), (2, 8, 2)),
            (5, ((1, 1, -2), (0, -9, 9)), (3, 3, 1), (True, True, True), (2, 2, 8)),
            (8, ((3, 3, -6), (2, -1, -1)), (1, 3, 3), (True, True, True), (8, 2, 2)),
        ],
        "isomorphic_pairs": [(0, 1), (0, 2), (1, 2)],
    },
    {
        "mu": 9,
        "u": (1, 1, 4),
        "members": [
            (2, ((2, 2, -1), (1, -17, 4)), (3, 3, 2), (True, True, True), (2, 2, 9)),
            (5, ((6, 6, -3), (1, -5, 1)), (3, 1, 6), (True, True, True), (2, 8, 5)),
            (8, ((6, 6, -3), (5, -1, -1)), (1, 3, 6), (True, True, True), (8, 2, 5)),
        ],
        "isomorphic_pairs": [(1, 2)],
    },
    {
        "mu": 9,
        "u": (1, 4, 25),
        "members": [
            (2, ((15, 15, -3), (2, -13, 2)), (3, 2, 15), (True, True, True), (2, 9, 8)),
            (5, ((5, 5, -1), (1, -44, 7)), (3, 6, 5), (True, True, True), (2, 5, 12)),
            (8, ((15, 15, -3), (7, -8, 1)), (1, 6, 15), (True, True, True), (8, 5, 8)),
        ],
        "isomorphic_pairs": [],
    },
    {
        "mu": 8,
        "u": (1, 1, 2),
        "members": [
            (1, ((1, 1, -1), (0, -16, 8)), (4, 4, 1), (False, False, True), (1, 1, 15)),
            (3, ((4, 4, -4), (1, -3, 1)), (2, 1, 4), (True, True, True), (2, 7, 3)),
            (5, ((2, 2, -2), (1, -7, 3)), (4, 4, 2), (False, False, True), (3, 3, 4)),
            (7, ((4, 4, -4), (3, -1, -1)), (1, 2, 4), (True, True, True), (7, 2, 3)),
        ],
        "isomorphic_pairs": [(1, 3)],
    },
    {
        "mu": 8,
        "u": (1, 9, 2),
        "members": [
            (1, ((2, 2, -10), (1, -7, 31)), (4, 12, 2), (False, False, True), (1, 11, 4)),
            (3, ((4, 4, -20), (3, -1, 3)), (2, 3, 4), (True, True, True), (2, 9, 3)),
            (5, ((1, 1, -5), (0, -16, 72)), (4, 12, 1), (False, False, True), (3, 3, 15)),
            (7, ((4, 4, -20), (1, -3, 13)), (1, 6, 4), (True, True, True), (7, 6, 3)),
        ],
        "isomorphic_pairs": [],
    },
]

# ---------------------------------------------------------------------------
# Classification series: constellation multiplier sets relative to the
# square-decomposition parts (x0, x1, x2), and the T-flag columns.
# ---------------------------------------------------------------------------

CONSTELLATIONS = {
    "9-1-0": {(1, 1, 1)},
    "8-1-0": {(1, 1, 1)},
    "6-1-0": {(1, 1, 1)},
    "5-1-0": {(1, 1, 1)},
    "4-2-1": {(1, 1, 1)},
    "3-3-2": {(1, 1, 1)},
    "3-2-1": {(1, 2, 1)},
    "2-4-1": {(2, 2, 1)},
    "2-4-3": {(1, 1, 2)},
    "2-3-1": {(3, 3, 3), (3, 3, 1)},
    "2-3-2": {(1, 1, 3)},
    "1-9-2": {(3, 1, 3), (3, 3, 1)},
    "1-9-5": {(3, 1, 3), (3, 3, 1)},
    "1-9-8": {(1, 3, 3)},
    "1-8-1": {(4, 4, 1), (4, 4, 2)},
    "1-8-3": {(2, 1, 4)},
    "1-8-5": {(4, 4, 1), (4, 4, 2)},
    "1-8-7": {(1, 2, 4)},
    "1-6-1": {(3, 6, 1), (3, 6, 3)},
    "1-6-5": {(1, 2, 3)},
    "1-5-1": {(5, 5, 1), (5, 5, 5)},
    "1-5-2": {(5, 5, 1), (5, 5, 5)},
    "1-5-3": {(5, 5, 1), (5, 5, 5)},
    "1-5-4": {(1, 1, 5)},
}

#: Series with exactly one T-singular fixed point (pattern (-,-,+)); all
#: other series are T-singular at every singular point.
ONE_T_SERIES = {"2-3-1", "1-8-1", "1-8-5", "1-6-1", "1-5-1", "1-5-2", "1-5-3"}

#: Anticanonical torsion parts of the adjusted series members.
ANTICANONICAL_TORSION = {
    "4-2-1": 0,
    "3-3-2": 0,
    "3-2-1": 0,
    "2-4-1": 2,
    "2-4-3": 0,
    "2-3-1": 2,
    "2-3-2": 0,
    "1-9-2": 3,
    "1-9-5": 6,
    "1-9-8": 0,
    "1-8-1": 2,
    "1-8-3": 4,
    "1-8-5": 6,
    "1-8-7": 0,
    "1-6-1": 2,
    "1-6-5": 0,
    "1-5-1": 2,
    "1-5-2": 3,
    "1-5-3": 4,
    "1-5-4": 0,
}

ALL_SERIES = sorted(CONSTELLATIONS)

# ---------------------------------------------------------------------------
# Self-adjacency census.  The published remark lists the same 16 series; in
# its non-toric sublist the entry (1-5-1) contradicts both the printed
# generator matrices (the (1-5-1) base generator has slice shape l1 = 1)
# and the Gorenstein index tables, while (2-3-2) is missing despite its
# printed generator [[3,3,-3],[1,-2,1]] having the non-toric slice shape
# l1 = l2 = 3.  The corrected sublist below swaps those two entries.
# ---------------------------------------------------------------------------

SELF_ADJACENT_SERIES = {
    "8-1-0", "4-2-1", "2-4-1", "2-4-3", "1-8-1", "1-8-3", "1-8-5",
    "6-1-0", "3-2-1", "2-3-1", "2-3-2", "1-6-1", "1-6-5",
    "5-1-0", "1-5-1", "1-5-4",
}

NON_TORIC_SELF_ADJACENT = {"2-4-3", "2-3-2", "1-8-3", "1-8-5", "1-6-5", "1-5-4"}

# ---------------------------------------------------------------------------
# Adjacency graph figures.  Nodes are (u arranged as printed, eta); edges
# list index pairs into the node list, with a jump flag.
# ---------------------------------------------------------------------------

ADJ_FIGURE_2_3_1 = {
    "a": 2,
    "mu": 3,
    "nodes": [
        ((1, 2, 3), 1),
        ((1, 8, 3), 1), ((25, 2, 3), 1),
        ((1, 8, 27), 1), ((121, 8, 3), 1), ((25, 2, 243), 1), ((25, 392, 3), 1),
        ((1, 98, 27), 1), ((1225, 8, 27), 1), ((121, 8, 5547), 1), ((121, 1922, 3), 1),
        ((25, 35912, 243), 1), ((2401, 2, 243), 1), ((25, 392, 57963), 1), ((6241, 392, 3), 1),
    ],
    "edges": [
        (((1, 8, 3), 1), ((1, 8, 27), 1), False),
        (((25, 2, 3), 1), ((25, 2, 243), 1), False),
        (((121, 8, 3), 1), ((121, 8, 5547), 1), False),
        (((25, 392, 3), 1), ((25, 392, 57963), 1), False),
    ],
}

ADJ_FIGURE_1_6_1 = {
    "a": 1,
    "mu": 6,
    "nodes": [(u, 1) for (u, _) in ADJ_FIGURE_2_3_1["nodes"]],
    "edges": [((a[0], 1), (b[0], 1), False) for (a, b, _) in ADJ_FIGURE_2_3_1["edges"]],
}

ADJ_FIGURE_1_5_1 = {
    "a": 1,
    "mu": 5,
    "nodes": [
        ((1, 4, 5), 1),
        ((1, 9, 5), 1), ((4, 81, 5), 1),
        ((1, 9, 20), 1), ((9, 196, 5), 1), ((4, 81, 1445), 1), ((81, 1849, 5), 1),
        ((1, 49, 20), 1), ((9, 841, 20), 1), ((9, 196, 8405), 1), ((196, 4489, 5), 1),
        ((4, 25921, 1445), 1), ((81, 582169, 1445), 1), ((81, 1849, 744980), 1), ((1849, 42436, 5), 1),
    ],
    "edges": [
        (((1, 9, 5), 1), ((1, 9, 20), 1), False),
        (((4, 81, 5), 1), ((4, 81, 1445), 1), False),
        (((9, 196, 5), 1), ((9, 196, 8405), 1), False),
        (((81, 1849, 5), 1), ((81, 1849, 744980), 1), False),
    ],
}

ADJ_FIGURE_1_5_23 = {
    "a": 1,
    "mu": 5,
    "nodes": [
        ((1, 4, 5), 2), ((1, 4, 5), 3),
        ((1, 9, 5), 2), ((1, 9, 5), 3), ((4, 81, 5), 2), ((4, 81, 5), 3),
        ((1, 9, 20), 2), ((1, 9, 20), 3), ((9, 196, 5), 2), ((9, 196, 5), 3),
        ((4, 81, 1445), 2), ((4, 81, 1445), 3), ((81, 1849, 5), 2), ((81, 1849, 5), 3),
        ((1, 49, 20), 2), ((1, 49, 20), 3), ((9, 841, 20), 2), ((9, 841, 20), 3),
        ((9, 196, 8405), 2), ((9, 196, 8405), 3), ((196, 4489, 5), 2), ((196, 4489, 5), 3),
        ((4, 25921, 1445), 2), ((4, 25921, 1445), 3), ((81, 582169, 1445), 2), ((81, 582169, 1445), 3),
        ((81, 1849, 744980), 2), ((81, 1849, 744980), 3), ((1849, 42436, 5), 2), ((1849, 42436, 5), 3),
    ],
    "edges": [
        (((1, 4, 5), 2), ((1, 4, 5), 3), True),
        (((1, 9, 5), 2), ((1, 9, 20), 3), True),
        (((1, 9, 5), 3), ((1, 9, 20), 2), True),
        (((4, 81, 5), 2), ((4, 81, 1445), 3), True),
        (((4, 81, 5), 3), ((4, 81, 1445), 2), True),
        (((9, 196, 5), 2), ((9, 196, 8405), 3), True),
        (((9, 196, 5), 3), ((9, 196, 8405), 2), True),
        (((81, 1849, 5), 2), ((81, 1849, 744980), 3), True),
        (((81, 1849, 5), 3), ((81, 1849, 744980), 2), True),
    ],
}

ADJ_FIGURE_1_8 = {
    "a": 1,
    "mu": 8,
    "nodes": [
        ((1, 1, 2), 3),
        ((1, 9, 2), 3), ((1, 9, 2), 7),
        ((1, 9, 50), 3), ((1, 9, 50), 7), ((9, 121, 2), 3), ((9, 121, 2), 7),
        ((1, 289, 50), 3), ((1, 289, 50), 7), ((9, 3481, 50), 3), ((9, 3481, 50), 7),
        ((9, 121, 8450), 3), ((9, 121, 8450), 7), ((121, 1681, 2), 3), ((121, 1681, 2), 7),
        ((1, 289, 1682), 3), ((1, 289, 1682), 7), ((289, 114921, 50), 3), ((289, 114921, 50), 7),
        ((9, 3481, 243602), 3), ((9, 3481, 243602), 7), ((3481, 1385329, 50), 3), ((3481, 1385329, 50), 7),
        ((9, 591361, 8450), 3), ((9, 591361, 8450), 7), ((121, 8162449, 8450), 3), ((121, 8162449, 8450), 7),
        ((121, 1681, 1623602), 3), ((121, 1681, 1623602), 7), ((1681, 23409, 2), 3), ((1681, 23409, 2), 7),
    ],
    "edges": [
        (((1, 1, 2), 3), ((1, 9, 2), 3), False),
        (((1, 1, 2), 3), ((1, 9, 2), 7), False),
        (((1, 9, 2), 3), ((1, 9, 50), 3), False),
        (((1, 9, 2), 7), ((1, 9, 50), 7), False),
        (((1, 9, 2), 3), ((9, 121, 2), 7), True),
        (((1, 9, 2), 7), ((9, 121, 2), 3), True),
        (((1, 9, 50), 3), ((1, 289, 50), 3), False),
        (((1, 9, 50), 7), ((1, 289, 50), 7), False),
        (((1, 9, 50), 3), ((9, 3481, 50), 7), True),
        (((1, 9, 50), 7), ((9, 3481, 50), 3), True),
        (((9, 121, 2), 3), ((9, 121, 8450), 3), False),
        (((9, 121, 2), 7), ((9, 121, 8450), 7), False),
        (((9, 121, 2), 3), ((121, 1681, 2), 7), True),
        (((9, 121, 2), 7), ((121, 1681, 2), 3), True),
        (((1, 289, 50), 3), ((1, 289, 1682), 3), False),
        (((1, 289, 50), 7), ((1, 289, 1682), 7), False),
        (((1, 289, 50), 3), ((289, 114921, 50), 7), True),
        (((1, 289, 50), 7), ((289, 114921, 50), 3), True),
        (((9, 3481, 50), 3), ((9, 3481, 243602), 3), False),
        (((9, 3481, 50), 7), ((9, 3481, 243602), 7), False),
        (((9, 3481, 50), 3), ((3481, 1385329, 50), 7), True),
        (((9, 3481, 50), 7), ((3481, 1385329, 50), 3), True),
        (((9, 121, 8450), 3), ((9, 591361, 8450), 3), False),
        (((9, 121, 8450), 7), ((9, 591361, 8450), 7), False),
        (((9, 121, 8450), 3), ((121, 8162449, 8450), 7), True),
        (((9, 121, 8450), 7), ((121, 8162449, 8450), 3), True),
        (((121, 1681, 2), 3), ((121, 1681, 1623602), 3), False),
        (((121, 1681, 2), 7), ((121, 1681, 1623602), 7), False),
        (((121, 1681, 2), 3), ((1681, 23409, 2), 7), True),
        (((121, 1681, 2), 7), ((1681, 23409, 2), 3), True),
    ],
}

ADJ_FIGURE_1_8_1 = {
    "a": 1,
    "mu": 8,
    "eta": 1,
    "nodes": [
        ((1, 1, 2), 1),
        ((1, 9, 2), 1),
        ((1, 9, 50), 1), ((9, 121, 2), 1),
        ((1, 289, 50), 1), ((9, 3481, 50), 1), ((9, 121, 8450), 1), ((121, 1681, 2), 1),
        ((1, 289, 1682), 1), ((289, 114921, 50), 1), ((9, 3481, 243602), 1), ((3481, 1385329, 50), 1),
        ((9, 591361, 8450), 1), ((121, 8162449, 8450), 1), ((121, 1681, 1623602), 1), ((1681, 23409, 2), 1),
    ],
    "edges": [
        (((1, 9, 2), 1), ((1, 9, 50), 1), False),
        (((9, 121, 2), 1), ((9, 121, 8450), 1), False),
        (((1, 289, 50), 1), ((1, 289, 1682), 1), False),
        (((9, 3481, 50), 1), ((9, 3481, 243602), 1), False),
        (((121, 1681, 2), 1), ((121, 1681, 1623602), 1), False),
    ],
}

ADJ_FIGURE_1_8_5 = {
    "a": 1,
    "mu": 8,
    "eta": 5,
    "nodes": [(u, 5) for (u, _) in ADJ_FIGURE_1_8_1["nodes"]],
    "edges": [((a[0], 5), (b[0], 5), False) for (a, b, _) in ADJ_FIGURE_1_8_1["edges"]],
}
