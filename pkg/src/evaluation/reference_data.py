# src/evaluation/reference_data.py
"""
Published reference values: pattern tables, small transfer matrices in their
published vertex order, and the sequences the verification suites compare to.
"""

from typing import Dict, Optional, Tuple

from src.core.combinatorics import Composition

C = Composition.of

# fmt: off

# jp_{b,kappa}(n) for n = 1..15, keyed by kappa (None = unbounded) then b
JP_TABLES: Dict[Optional[int], Dict[int, Tuple[int, ...]]] = {
    None: {
        2: (2, 4, 13, 37, 118, 356, 1142, 3620, 11744, 38275, 126234, 418735,
            1399610, 4702499, 15883190),
        3: (3, 12, 63, 310, 1618, 8434, 45142, 243998, 1336644, 7392117,
            41247234, 231856131, 1311820110, 7464002451, 42679372930),
        4: (5, 32, 261, 2089, 17449, 147807, 1276577, 11169023, 98872035,
            883717142, 7964898829, 72305691686, 660528998007, 6067348742573,
            56002661734041),
        5: (7, 77, 964, 12086, 156975, 2077448, 27976399, 381752857,
            5267354817, 73358245986, 1029873201879, 14559160765380,
            207076019661773, 2961063646029819, 42542385162393167),
    },
    2: {
        2: (2, 4, 13, 37, 118, 356, 1142, 3620, 11744, 38275, 126234, 418735,
            1399610, 4702499, 15883190),
        3: (2, 9, 47, 224, 1118, 5522, 27910, 141946, 730544, 3790391,
            19827570, 104422007, 553339258, 2947940371, 15780565950),
        4: (3, 18, 134, 950, 6938, 50751, 376402, 2813824, 21219536,
            161190485, 1232724798, 9483975303, 73360425430, 570219618745,
            4451677886746),
        5: (3, 30, 314, 3140, 31886, 324909, 3341566, 34605634, 360849352,
            3785776259, 39941119938, 423549648963, 4512516867634,
            48282551418859, 518633980103198),
    },
    3: {
        2: (2, 4, 13, 37, 118, 356, 1142, 3620, 11744, 38275, 126234, 418735,
            1399610, 4702499, 15883190),
        3: (3, 12, 63, 310, 1618, 8434, 45142, 243998, 1336644, 7392117,
            41247234, 231856131, 1311820110, 7464002451, 42679372930),
        4: (4, 28, 231, 1840, 15168, 126258, 1069002, 9154845, 79252442,
            692290928, 6095630354, 54045188641, 482108239540, 4323812672665,
            38963338572980),
        5: (5, 58, 713, 8591, 106073, 1325570, 16789985, 214916096,
            2776778019, 36167946945, 474470288650, 6263882726811,
            83162406390939, 1109678347266127, 14873888879020290),
    },
}

# a_b, b = 0..12
CARD_COUNTS = (1, 2, 7, 24, 82, 280, 956, 3264, 11144, 38048, 129904, 443520,
               1514272)

# trace(A_b), b = 0..15
TRACES = (1, 2, 5, 11, 24, 50, 104, 212, 431, 870, 1752, 3518, 7057, 14138,
          28310, 56661)

# entry sums of A_{b,2}, b = 0..14
CAPACITY2_CARDS = (1, 2, 7, 17, 41, 91, 195, 403, 812, 1601, 3102, 5922, 11165,
                   20824, 38477)

PRINTED_ORDERS: Dict[int, Tuple[Composition, ...]] = {
    0: (C(),),
    1: (C(1),),
    2: (C(2), C(1, 1)),
    3: (C(3), C(2, 1), C(1, 2), C(1, 1, 1)),
    4: (C(4), C(3, 1), C(1, 3), C(2, 1, 1), C(2, 2), C(1, 2, 1), C(1, 1, 2),
        C(1, 1, 1, 1)),
}

# rows/columns in PRINTED_ORDERS[b]
PRINTED_MATRICES: Dict[int, Tuple[Tuple[int, ...], ...]] = {
    0: ((1,),),
    1: ((2,),),
    2: ((2, 1),
        (1, 3)),
    3: ((2, 1, 1, 1),
        (1, 3, 2, 3),
        (1, 1, 2, 0),
        (0, 1, 1, 4)),
    4: ((2, 1, 1, 1, 1, 1, 1, 1),
        (1, 3, 2, 3, 2, 3, 3, 4),
        (1, 1, 2, 0, 0, 0, 0, 0),
        (0, 1, 1, 4, 1, 3, 3, 6),
        (1, 1, 1, 1, 3, 1, 1, 0),
        (0, 1, 0, 2, 1, 2, 0, 0),
        (0, 0, 1, 0, 1, 1, 3, 0),
        (0, 0, 0, 1, 0, 1, 1, 5)),
}

# A_3(q) entries as ascending coefficient tuples, PRINTED_ORDERS[3]
PRINTED_Q_MATRIX_3: Tuple[Tuple[Tuple[int, ...], ...], ...] = (
    ((2,), (1,), (1,), (1,)),
    ((1,), (2, 1), (1, 1), (1, 1, 1)),
    ((1,), (0, 1), (2,), ()),
    ((), (1,), (0, 1), (2, 1, 1)),
)

PRINTED_DISTINCT_MATRICES: Dict[int, Tuple[Tuple[int, ...], ...]] = {
    2: ((1, 1),
        (1, 3)),
    3: ((1, 0, 0, 1),
        (0, 2, 1, 3),
        (1, 1, 2, 0),
        (0, 1, 1, 4)),
}
# fmt: on
