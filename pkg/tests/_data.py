"""Cached enumerations and small fixtures shared across test modules."""

from functools import lru_cache

from esnkit.enumeration import enumerate_structures

# Frozen after the first oracle run: (labelled, up to isomorphism).
FROZEN_COUNTS = {
    "semigroupoid": [(1, 1), (2, 2), (16, 10), (277, 59)],
    "ehresmann": [(1, 1), (1, 1), (7, 4), (103, 20)],
    "restriction": [(1, 1), (1, 1), (7, 4), (91, 18)],
    "inverse": [(1, 1), (1, 1), (5, 3), (37, 8)],
    "local-meet-semilattice": [(1, 1), (1, 1), (3, 2), (16, 4), (137, 10)],
    "lbec": [(1, 1), (1, 1), (7, 4), (103, 20)],
    "lic": [(1, 1), (1, 1), (7, 4), (91, 18)],
    "lig": [(1, 1), (1, 1), (5, 3), (37, 8)],
}


@lru_cache(maxsize=None)
def enum(cls, n, dedup=False):
    return tuple(enumerate_structures(cls, n, dedup))


def enum_upto(cls, top=3, dedup=False):
    return [x for n in range(top + 1) for x in enum(cls, n, dedup)]
