"""Isomorphism search between finite lattices."""

import logging
from dataclasses import dataclass

import numpy as np

from .core import ElementId, Lattice

logger = logging.getLogger(__name__)

type Profile = tuple[int, int, int]


@dataclass(frozen=True)
class IsoMap:
    """A bijection between the elements of two lattices.

    Attributes:
        forward: `forward[x]` is the image of element `x`.
    """

    forward: tuple[ElementId, ...]

    def __call__(self, x: ElementId) -> ElementId:
        return self.forward[x]

    def inverse(self) -> "IsoMap":
        backward = [0] * len(self.forward)
        for x, y in enumerate(self.forward):
            backward[y] = x
        return IsoMap(tuple(backward))


def element_profiles(lattice: Lattice) -> list[Profile]:
    """`(height, lower covers, upper covers)` of every element."""
    cover = lattice.cover_matrix()
    lowers = cover.sum(axis=0)
    uppers = cover.sum(axis=1)
    return [
        (height, int(lowers[x]), int(uppers[x]))
        for x, height in enumerate(lattice.element_heights())
    ]


def is_isomorphism(first: Lattice, second: Lattice, forward: tuple[int, ...]) -> bool:
    """Whether `forward` is a bijection preserving join and meet."""
    n = len(first)
    if len(second) != n or len(forward) != n or sorted(forward) != list(range(n)):
        return False
    image = np.asarray(forward, dtype=np.intp)
    return bool(
        (image[first.join_table] == second.join_table[image[:, None], image]).all()
        and (image[first.meet_table] == second.meet_table[image[:, None], image]).all()
    )


def find_isomorphism(first: Lattice, second: Lattice) -> IsoMap | None:
    """Find a join- and meet-preserving bijection from `first` to `second`.

    Elements of `first` are assigned in id order, each to the smallest
    unused element of `second` with the same profile whose order
    relations to all earlier assignments agree. The first complete
    assignment in this lexicographic backtracking order is returned, so
    the result is deterministic. An order isomorphism between lattices
    preserves join and meet; this is asserted before returning.

    Returns:
        The map, or None if the lattices are not isomorphic.
    """
    n = len(first)
    if len(second) != n:
        return None
    first_profiles = element_profiles(first)
    second_profiles = element_profiles(second)
    if sorted(first_profiles) != sorted(second_profiles):
        return None

    candidates = [
        [y for y in range(n) if second_profiles[y] == first_profiles[x]]
        for x in range(n)
    ]
    leq1, leq2 = first.leq, second.leq
    forward: list[int] = []
    used = [False] * n

    def extend(x: int) -> bool:
        if x == n:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            if all(
                leq1[x, px] == leq2[y, py] and leq1[px, x] == leq2[py, y]
                for px, py in enumerate(forward)
            ):
                forward.append(y)
                used[y] = True
                if extend(x + 1):
                    return True
                forward.pop()
                used[y] = False
        return False

    if not extend(0):
        return None
    result = tuple(forward)
    assert is_isomorphism(first, second, result), "order isomorphism preserves join"
    logger.debug(f"Found isomorphism {result}")
    return IsoMap(result)
