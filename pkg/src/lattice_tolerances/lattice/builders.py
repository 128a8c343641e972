"""Standard lattices used by the verification corpus."""

import itertools
import string

import numpy as np

from lattice_tolerances.errors import UnknownNameError

from .core import Lattice, from_covers


def chain_labels(n: int) -> list[str]:
    """Labels `0 < a < b < ... < 1` of an n-element chain.

    One- and two-element chains are labelled `0` and `0, 1`. Chains
    longer than the alphabet fall back to `c1, c2, ...` inside.
    """
    if n < 1:
        raise ValueError("A chain needs at least one element")
    if n == 1:
        return ["0"]
    inner = n - 2
    if inner <= len(string.ascii_lowercase):
        middle = list(string.ascii_lowercase[:inner])
    else:
        middle = [f"c{i}" for i in range(1, inner + 1)]
    return ["0", *middle, "1"]


def chain(n: int) -> Lattice:
    """The n-element chain."""
    labels = chain_labels(n)
    return Lattice(labels, np.triu(np.ones((n, n), dtype=np.bool_)))


def boolean_cube(k: int) -> Lattice:
    """The lattice of subsets of a k-element set.

    Element ids are bitmasks and labels are the masks written as `k`-digit
    binary strings (`0` for the one-element cube `k = 0`).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    size = 1 << k
    masks = np.arange(size)
    labels = [format(mask, f"0{k}b") for mask in range(size)] if k else ["0"]
    leq = (masks[:, None] & ~masks[None, :]) == 0
    return Lattice(labels, leq)


_NAMED_COVERS: dict[str, tuple[list[str], list[tuple[str, str]]]] = {
    "M3": (
        ["o", "a", "b", "c", "i"],
        [("o", "a"), ("o", "b"), ("o", "c"), ("a", "i"), ("b", "i"), ("c", "i")],
    ),
    "N5": (
        ["o", "a", "b", "c", "i"],
        [("o", "a"), ("a", "b"), ("b", "i"), ("o", "c"), ("c", "i")],
    ),
}


def named(name: str) -> Lattice:
    """A lattice known by name: `M3` (the diamond) or `N5` (the pentagon).

    Raises:
        UnknownNameError: If `name` is not recognized.
    """
    if name not in _NAMED_COVERS:
        raise UnknownNameError(name)
    labels, covers = _NAMED_COVERS[name]
    return from_covers(labels, covers)


def direct_product(first: Lattice, second: Lattice) -> Lattice:
    """Cartesian product with componentwise order.

    The element `(x1, x2)` has id `x1 * |second| + x2` and label
    `(label1,label2)`.
    """
    labels = [
        f"({a},{b})" for a, b in itertools.product(first.labels, second.labels)
    ]
    leq = np.kron(first.leq.astype(np.intp), second.leq.astype(np.intp)) > 0
    return Lattice(labels, leq)
