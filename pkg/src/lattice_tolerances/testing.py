"""Corpus lattices and brute-force oracles for testing.

The oracles are deliberately naive so that they can serve as
independent references for the real algorithms.
"""

import itertools
from collections.abc import Iterable, Sequence

import numpy as np

from .blocks import Block
from .lattice import (
    Lattice,
    boolean_cube,
    chain,
    direct_product,
    named,
)
from .relations import BinaryRelation, Pair

MAX_ORACLE_SIZE = 12


def corpus() -> dict[str, Lattice]:
    """The acceptance corpus, in a fixed order."""
    lattices = {f"chain{n}": chain(n) for n in range(1, 7)}
    lattices["cube2"] = boolean_cube(2)
    lattices["cube3"] = boolean_cube(3)
    lattices["M3"] = named("M3")
    lattices["N5"] = named("N5")
    lattices["chain2xchain3"] = direct_product(chain(2), chain(3))
    return lattices


def glued_tolerance(lattice: Lattice) -> BinaryRelation:
    """The tolerance `0~a`, `a~1` of the 3-chain `0 < a < 1`."""
    zero, a, one = (lattice.index(label) for label in ("0", "a", "1"))
    return BinaryRelation.from_pairs(
        len(lattice), [(zero, a), (a, one)], symmetric=True, reflexive=True
    )


def maximal_cliques_oracle(lattice: Lattice, rho: BinaryRelation) -> list[Block]:
    """Maximal subsets `X` with `X x X` inside `rho`, by testing every
    subset.

    Raises:
        ValueError: If the lattice has more than `MAX_ORACLE_SIZE` elements.
    """
    n = len(lattice)
    if n > MAX_ORACLE_SIZE:
        raise ValueError(f"Oracle is limited to {MAX_ORACLE_SIZE} elements")
    bits = rho.bits

    def is_clique(members: Sequence[int]) -> bool:
        return bool(bits[np.ix_(members, members)].all())

    cliques = [
        members
        for size in range(1, n + 1)
        for members in itertools.combinations(range(n), size)
        if is_clique(members)
    ]
    maximal = [
        members
        for members in cliques
        if not any(
            is_clique(sorted((*members, extra)))
            for extra in range(n)
            if extra not in members
        )
    ]
    return sorted(Block(members) for members in maximal)


def generated_tolerance_oracle(
    tolerances: Iterable[BinaryRelation], n: int, pairs: Iterable[Pair]
) -> BinaryRelation:
    """Intersection of all tolerances (of an `n`-element lattice) that
    contain `pairs`."""
    pairs = list(pairs)
    result = BinaryRelation.full(n)
    for tolerance in tolerances:
        if all(pair in tolerance for pair in pairs):
            result = result & tolerance
    return result


def congruence_model(lattice: Lattice, rho: BinaryRelation) -> Lattice:
    """The disjoint union of the classes of the congruence `rho`, with
    `(X, x) <= (Y, y)` iff `x <= y`.

    For a congruence this models the paired lattice built from `rho`
    independently of blocks and pair operations.
    """
    elements = [
        (i, x) for i, members in enumerate(rho.classes()) for x in members
    ]
    xs = np.asarray([x for _, x in elements], dtype=np.intp)
    labels = [f"{i}:{lattice.labels[x]}" for i, x in elements]
    return Lattice(labels, lattice.leq[np.ix_(xs, xs)])
