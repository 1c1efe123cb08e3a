"""Expected analyses of the reference fixtures, shared by several test modules."""

from __future__ import annotations

REFERENCE_BDRY = [
    (1, 2, 19, 20),
    (2, 3, 3, 4),
    (2, 3, 4, 8),
    (3, 4, 4, 8),
    (9, 5, 5, 2),
    (7, 6, 6, 9),
    (8, 7, 6, 9),
    (8, 7, 7, 6),
    (11, 10, 10, 14),
    (8, 12, 16, 19),
    (17, 13, 13, 9),
    (18, 17, 13, 9),
    (18, 17, 17, 13),
    (19, 18, 13, 9),
    (19, 18, 17, 13),
    (19, 18, 18, 17),
]
REFERENCE_MSR = [
    (1, 20), (2, 19), (3, 3), (4, 4), (5, 5), (6, 6),
    (7, 7), (10, 10), (12, 16), (13, 13), (17, 17), (18, 18),
]
REFERENCE_PST = [
    (1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7),
    (2, 12), (2, 13), (2, 17), (2, 18), (12, 10),
]

# stretching of the reduced reference subgraph, in its local labels
STRETCHED_SUBGRAPH = [
    (1, 5), (2, 8), (3, 4), (4, 2), (4, 9), (5, 6), (6, 6), (6, 7), (7, 3),
    (7, 11), (8, 3), (8, 9), (9, 10), (10, 5), (10, 11), (11, 12), (12, 5), (12, 13),
]
STRETCHED_SUBGRAPH_ORIGIN = (8, 10, 11, 11, 12, 12, 12, 14, 15, 15, 16, 16, 19)

# first coarsening of the reference graph
COARSE_J = (1, 12, 14, 15, 16, 20)
COARSE_K = (2, 8, 9, 11, 19)
COARSE_L = (3, 4, 5, 6, 7, 10, 13, 17, 18)
COARSE_A = [
    (1, 2), (2, 8), (8, 9), (8, 12), (9, 2), (11, 14), (11, 15), (12, 11), (12, 12),
    (12, 16), (14, 11), (14, 15), (15, 12), (15, 16), (16, 12), (16, 19), (19, 9), (19, 20),
]
COARSE_M = [(3, 2), (4, 3), (5, 9), (6, 7), (7, 8), (10, 11), (13, 17), (17, 18), (18, 19)]
# second coarsening, in original labels
FINAL_EDGES = {(1, 2), (9, 2), (2, 8), (8, 9), (19, 9), (8, 19), (19, 20)}
