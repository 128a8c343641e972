"""Finite lattices as dense element ids with order, join and meet tables."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from typing import Any, Self, override

import networkx as nx
import numpy as np
import numpy.typing as npt

from lattice_tolerances.errors import (
    CycleDetectedError,
    DuplicateLabelError,
    IndexOutOfRangeError,
    NotALatticeError,
    SizeMismatchError,
    UnknownLabelError,
)

type ElementId = int
type BoolMatrix = npt.NDArray[np.bool_]
type IndexMatrix = npt.NDArray[np.intp]

logger = logging.getLogger(__name__)


def readonly[T: np.generic](array: npt.NDArray[T]) -> npt.NDArray[T]:
    """Return a write-protected copy of `array`."""
    copied = np.array(array, copy=True)
    copied.flags.writeable = False
    return copied


def transitive_closure(relation: npt.ArrayLike) -> BoolMatrix:
    """Compute the reflexive-transitive closure of a square boolean matrix.

    Boolean Floyd-Warshall: after step `k`, every path whose inner
    vertices are below `k` is closed.
    """
    closure = np.asarray(relation, dtype=np.bool_) | np.eye(
        len(np.asarray(relation)), dtype=np.bool_
    )
    for k in range(len(closure)):
        closure |= closure[:, k : k + 1] & closure[k : k + 1, :]
    return closure


def _index_labels(labels: Iterable[Any]) -> dict[str, ElementId]:
    index: dict[str, ElementId] = {}
    for i, label in enumerate(str(label) for label in labels):
        if label in index:
            raise DuplicateLabelError(label)
        index[label] = i
    if not index:
        raise ValueError("A lattice needs at least one element")
    return index


def _check_partial_order(labels: tuple[str, ...], order: BoolMatrix) -> None:
    n = len(labels)
    for x in np.flatnonzero(~np.diagonal(order)):
        raise NotALatticeError(labels[x], labels[x], "violate reflexivity")
    mutual = order & order.T & ~np.eye(n, dtype=np.bool_)
    for x, y in np.argwhere(mutual):
        raise NotALatticeError(labels[x], labels[y], "lie below each other")
    two_step = (order.astype(np.intp) @ order.astype(np.intp)) > 0
    for x, y in np.argwhere(two_step & ~order):
        raise NotALatticeError(labels[x], labels[y], "violate transitivity")


def _missing_bound_witness(order: BoolMatrix) -> tuple[int, int] | None:
    """A pair with no common bound above it under `order`, if any.

    Pairs sharing a bound on the other side are named first: a poset
    without a top reports two elements over a common one, not an
    isolated element.
    """
    as_int = order.astype(np.intp)
    shared = (as_int @ as_int.T) > 0
    opposite = (as_int.T @ as_int) > 0
    missing = np.triu(~shared)
    for candidates in (missing & opposite, missing):
        found = np.argwhere(candidates)
        if len(found):
            return int(found[0][0]), int(found[0][1])
    return None


def _bound_table(
    labels: tuple[str, ...], order: BoolMatrix, upper: bool
) -> IndexMatrix:
    """Least bounds of every pair under `order` (pass the transpose for
    greatest lower bounds).

    Missing bounds are reported before non-unique ones; see
    `_missing_bound_witness` for which pair is named.
    """
    kind = "upper" if upper else "lower"
    best = "least" if upper else "greatest"
    witness = _missing_bound_witness(order)
    if witness is not None:
        x, y = witness
        raise NotALatticeError(labels[x], labels[y], f"have no {kind} bound")
    n = len(labels)
    table = np.empty((n, n), dtype=np.intp)
    for x in range(n):
        for y in range(x, n):
            bounds = np.flatnonzero(order[x] & order[y])
            least = [u for u in bounds if order[u, bounds].all()]
            if len(least) != 1:
                raise NotALatticeError(
                    labels[x], labels[y], f"have no {best} {kind} bound"
                )
            table[x, y] = table[y, x] = least[0]
    return table


class Lattice:
    """A finite lattice on element ids `0..n-1`.

    Elements are dense integer ids; labels are metadata used for
    input and output only. The order, join and meet tables are
    read-only numpy arrays, so lattices are immutable values that may be
    shared between threads.
    """

    __slots__ = ("_labels", "_index", "_leq", "_join", "_meet")

    def __init__(self, labels: Sequence[Any], leq: npt.ArrayLike) -> None:
        """Build a lattice from its order matrix.

        Args:
            labels: Distinct element names, one per element id.
            leq: `n x n` boolean matrix with `leq[x][y]` iff `x <= y`.

        Raises:
            ValueError: If `labels` is empty.
            DuplicateLabelError: If a label repeats.
            SizeMismatchError: If `leq` is not `n x n`.
            NotALatticeError: If `leq` is not a partial order or some pair
                lacks a least upper or greatest lower bound.
        """
        self._index = _index_labels(labels)
        self._labels = tuple(self._index)
        n = len(self._labels)
        order = np.asarray(leq, dtype=np.bool_)
        if order.shape != (n, n):
            raise SizeMismatchError(n, order.shape[0] if order.ndim > 0 else 0)
        _check_partial_order(self._labels, order)
        self._leq = readonly(order)
        self._join = readonly(_bound_table(self._labels, order, upper=True))
        self._meet = readonly(_bound_table(self._labels, order.T, upper=False))

    @classmethod
    def from_order(cls, labels: Sequence[Any], leq: npt.ArrayLike) -> Self:
        """Alias of the constructor, named for symmetry with `from_tables`."""
        return cls(labels, leq)

    @classmethod
    def from_tables(
        cls, labels: Sequence[Any], join: npt.ArrayLike, meet: npt.ArrayLike
    ) -> Self:
        """Build a lattice from join and meet tables and revalidate it.

        The order is derived as `x <= y` iff `join[x][y] == y`. The
        lattice is then rebuilt from that order and the given tables must
        equal the recomputed least upper and greatest lower bounds.
        Finally all algebraic laws are checked on the tables.

        Raises:
            NotALatticeError: If the tables do not describe a lattice; the
                error carries a witness pair.
            SizeMismatchError: If a table is not `n x n`.
        """
        join_table = np.asarray(join, dtype=np.intp)
        meet_table = np.asarray(meet, dtype=np.intp)
        n = len(labels)
        for table in (join_table, meet_table):
            if table.shape != (n, n):
                raise SizeMismatchError(n, table.shape[0] if table.ndim > 0 else 0)
        leq = join_table == np.arange(n)[None, :]
        lattice = cls(labels, leq)
        names = lattice.labels
        for given, computed, op in (
            (join_table, lattice.join_table, "join"),
            (meet_table, lattice.meet_table, "meet"),
        ):
            for x, y in np.argwhere(given != computed):
                raise NotALatticeError(
                    names[x], names[y], f"have a {op} entry inconsistent with the order"
                )
        lattice.check_laws()
        return lattice

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    @property
    def leq(self) -> BoolMatrix:
        """Read-only order matrix."""
        return self._leq

    @property
    def join_table(self) -> IndexMatrix:
        return self._join

    @property
    def meet_table(self) -> IndexMatrix:
        return self._meet

    def check_element(self, x: ElementId) -> ElementId:
        """Return `x` if it is a valid element id.

        Raises:
            IndexOutOfRangeError: If `x` is outside `0..n-1`.
        """
        if not 0 <= x < len(self._labels):
            raise IndexOutOfRangeError(x, len(self._labels))
        return x

    def index(self, label: Any) -> ElementId:
        """Element id of `label`.

        Raises:
            UnknownLabelError: If no element has this label.
        """
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownLabelError(str(label)) from None

    def label(self, x: ElementId) -> str:
        return self._labels[self.check_element(x)]

    def le(self, x: ElementId, y: ElementId) -> bool:
        return bool(self._leq[x, y])

    def join(self, x: ElementId, y: ElementId) -> ElementId:
        return int(self._join[x, y])

    def meet(self, x: ElementId, y: ElementId) -> ElementId:
        return int(self._meet[x, y])

    @property
    def top(self) -> ElementId:
        return int(np.flatnonzero(self._leq.all(axis=0))[0])

    @property
    def bottom(self) -> ElementId:
        return int(np.flatnonzero(self._leq.all(axis=1))[0])

    def cover_matrix(self) -> BoolMatrix:
        """Boolean matrix of the cover relation (transitive reduction)."""
        strict = self._leq & ~np.eye(len(self), dtype=np.bool_)
        as_int = strict.astype(np.intp)
        return strict & ~((as_int @ as_int) > 0)

    def covers(self) -> list[tuple[ElementId, ElementId]]:
        """All pairs `(lower, upper)` with `lower` covered by `upper`,
        sorted."""
        return [(int(x), int(y)) for x, y in np.argwhere(self.cover_matrix())]

    def element_heights(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom to each element."""
        cover = self.cover_matrix()
        heights = [0] * len(self)
        # Elements with fewer elements below them come first.
        for y in np.argsort(self._leq.sum(axis=0), kind="stable"):
            lowers = np.flatnonzero(cover[:, y])
            if lowers.size:
                heights[y] = max(heights[x] for x in lowers) + 1
        return tuple(heights)

    def height(self) -> int:
        return self.element_heights()[self.top]

    def check_laws(self) -> None:
        """Check the lattice laws directly on the join and meet tables.

        Checks commutativity, idempotence, associativity, both absorption
        laws, and `x <= y` iff `x v y = y`.

        Raises:
            NotALatticeError: With the first witness found.
        """
        n = len(self)
        labels = self._labels
        ids = np.arange(n)
        for table, op in ((self._join, "join"), (self._meet, "meet")):
            for x, y in np.argwhere(table != table.T):
                raise NotALatticeError(labels[x], labels[y], f"{op} is not commutative")
            for x in np.flatnonzero(np.diagonal(table) != ids):
                raise NotALatticeError(labels[x], labels[x], f"{op} is not idempotent")
            left = table[table[:, :, None], ids[None, None, :]]
            right = table[ids[:, None, None], table[None, :, :]]
            for x, y, _ in np.argwhere(left != right):
                raise NotALatticeError(labels[x], labels[y], f"{op} is not associative")
        for outer, inner, law in (
            (self._meet, self._join, "x ^ (x v y) = x"),
            (self._join, self._meet, "x v (x ^ y) = x"),
        ):
            absorbed = outer[ids[:, None], inner]
            for x, y in np.argwhere(absorbed != ids[:, None]):
                raise NotALatticeError(labels[x], labels[y], f"violate {law}")
        for x, y in np.argwhere(self._leq != (self._join == ids[None, :])):
            raise NotALatticeError(labels[x], labels[y], "order disagrees with join")

    def is_distributive(self) -> bool:
        ids = np.arange(len(self))
        j, m = self._join, self._meet
        left = m[ids[:, None, None], j[None, :, :]]
        right = j[m[:, :, None], m[:, None, :]]
        return bool((left == right).all())

    def is_modular(self) -> bool:
        ids = np.arange(len(self))
        j, m = self._join, self._meet
        left = j[ids[:, None, None], m[None, :, :]]
        right = m[j[:, :, None], ids[None, None, :]]
        return bool(((left == right) | ~self._leq[:, None, :]).all())

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self._labels == other._labels and bool(
            np.array_equal(self._leq, other._leq)
        )

    @override
    def __hash__(self) -> int:
        return hash((self._labels, self._leq.tobytes()))

    @override
    def __repr__(self) -> str:
        return f"Lattice(n={len(self)}, labels={list(self._labels)})"


def from_covers(
    labels: Sequence[Any], covers: Iterable[tuple[Any, Any]]
) -> Lattice:
    """Build the lattice whose order is generated by a cover relation.

    Args:
        labels: Distinct element names.
        covers: Pairs `(lower, upper)` of labels.

    Returns:
        The lattice on `labels` ordered by the reflexive-transitive closure
        of `covers`.

    Raises:
        ValueError: If `labels` is empty.
        DuplicateLabelError: If a label repeats.
        UnknownLabelError: If a cover references an undeclared label.
        CycleDetectedError: If the cover graph has a cycle.
        NotALatticeError: If the closure is not a lattice order.
    """
    index = _index_labels(labels)
    names = tuple(index)
    graph: nx.DiGraph[int] = nx.DiGraph()
    graph.add_nodes_from(range(len(names)))
    for lower, upper in covers:
        for label in (lower, upper):
            if str(label) not in index:
                raise UnknownLabelError(str(label))
        graph.add_edge(index[str(lower)], index[str(upper)])
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [names[u] for u, _ in nx.find_cycle(graph)]
        raise CycleDetectedError([*cycle, cycle[0]])
    adjacency = nx.to_numpy_array(graph, nodelist=range(len(names)), dtype=np.bool_)
    logger.debug(f"Closing {graph.number_of_edges()} covers on {len(names)} elements")
    return Lattice(names, transitive_closure(adjacency))
