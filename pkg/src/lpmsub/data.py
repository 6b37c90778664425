"""Reference weight vectors, listed in lexicographic order of sorted bases."""

DELTA36_SPLIT_WEIGHTS = (
    (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)

DELTA36_SNAKE_WEIGHT = (0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 0, 0, 0, 1, 1, 2, 2, 2, 3, 5)

DELTA48_WEIGHT = (
    0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 2,
    2, 2, 3, 3, 4, 5, 5, 6, 8, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 2, 2, 2, 3,
    3, 4, 5, 5, 6, 8, 3, 3, 3, 4, 4, 5, 6, 6, 7, 9, 8, 8, 9, 11, 14,
)

# six pairwise weakly separated bases of U(3,6)
DELTA36_CLUSTER = ((1, 2, 3), (2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 5), (1, 2, 6))
