"""Binary relations on lattice elements as square bit matrices."""

from __future__ import annotations

import operator
from collections.abc import Iterable, Iterator
from typing import override

import numpy as np
import numpy.typing as npt

from lattice_tolerances.errors import IndexOutOfRangeError, SizeMismatchError
from lattice_tolerances.lattice.core import BoolMatrix, ElementId, readonly

type Pair = tuple[ElementId, ElementId]


class BinaryRelation:
    """An immutable relation on `0..n-1`, stored as an `n x n` bit matrix.

    Relations are value types: equality and hashing compare the bits.
    Raw relations may be neither reflexive nor symmetric; the tolerance
    and congruence predicates decide what a relation is.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: npt.ArrayLike) -> None:
        """
        Args:
            bits: Square boolean matrix with `bits[x][y]` iff `(x, y)` is
                in the relation.

        Raises:
            SizeMismatchError: If `bits` is not square.
        """
        matrix = np.asarray(bits, dtype=np.bool_)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            rows = matrix.shape[0] if matrix.ndim > 0 else 0
            cols = matrix.shape[1] if matrix.ndim > 1 else 0
            raise SizeMismatchError(rows, cols)
        self._bits = readonly(matrix)

    @classmethod
    def diagonal(cls, n: int) -> BinaryRelation:
        return cls(np.eye(n, dtype=np.bool_))

    @classmethod
    def full(cls, n: int) -> BinaryRelation:
        return cls(np.ones((n, n), dtype=np.bool_))

    @classmethod
    def from_pairs(
        cls,
        n: int,
        pairs: Iterable[Pair],
        *,
        symmetric: bool = False,
        reflexive: bool = False,
    ) -> BinaryRelation:
        """Relation containing `pairs`, optionally completed by mirrored
        pairs and the diagonal.

        Raises:
            IndexOutOfRangeError: If a pair references an id outside `0..n-1`.
        """
        bits = np.eye(n, dtype=np.bool_) if reflexive else np.zeros((n, n), np.bool_)
        for x, y in pairs:
            for element in (x, y):
                if not 0 <= element < n:
                    raise IndexOutOfRangeError(element, n)
            bits[x, y] = True
            if symmetric:
                bits[y, x] = True
        return cls(bits)

    @property
    def n(self) -> int:
        return len(self._bits)

    @property
    def bits(self) -> BoolMatrix:
        """Read-only bit matrix."""
        return self._bits

    def __contains__(self, pair: object) -> bool:
        if not isinstance(pair, tuple) or len(pair) != 2:  # pyright: ignore[reportUnknownArgumentType]
            return False
        try:
            x, y = (operator.index(v) for v in pair)  # pyright: ignore[reportUnknownArgumentType, reportUnknownVariableType]
        except TypeError:
            return False
        return 0 <= x < self.n and 0 <= y < self.n and bool(self._bits[x, y])

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs())

    def __len__(self) -> int:
        return int(self._bits.sum())

    def pairs(self) -> list[Pair]:
        """All related pairs in row-major order."""
        return [(int(x), int(y)) for x, y in np.argwhere(self._bits)]

    def nondiagonal_pairs(self) -> list[Pair]:
        """Related pairs `(x, y)` with `x < y`, in row-major order."""
        return [(int(x), int(y)) for x, y in np.argwhere(np.triu(self._bits, 1))]

    def is_reflexive(self) -> bool:
        return bool(np.diagonal(self._bits).all())

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self._bits, self._bits.T))

    def is_transitive(self) -> bool:
        as_int = self._bits.astype(np.intp)
        return not bool((((as_int @ as_int) > 0) & ~self._bits).any())

    def check_size(self, n: int) -> BinaryRelation:
        """Return self if it is a relation on `n` elements.

        Raises:
            SizeMismatchError: Otherwise.
        """
        if self.n != n:
            raise SizeMismatchError(n, self.n)
        return self

    def issubset(self, other: BinaryRelation) -> bool:
        other.check_size(self.n)
        return not bool((self._bits & ~other.bits).any())

    def __and__(self, other: BinaryRelation) -> BinaryRelation:
        return BinaryRelation(self._bits & other.check_size(self.n).bits)

    def __or__(self, other: BinaryRelation) -> BinaryRelation:
        return BinaryRelation(self._bits | other.check_size(self.n).bits)

    def classes(self) -> list[tuple[ElementId, ...]]:
        """Equivalence classes, each sorted, ordered by least member.

        Only meaningful for equivalence relations; for other relations the
        rows of the bit matrix are grouped by their least related element.
        """
        seen = np.zeros(self.n, dtype=np.bool_)
        result: list[tuple[ElementId, ...]] = []
        for x in range(self.n):
            if seen[x]:
                continue
            members = np.flatnonzero(self._bits[x])
            seen[members] = True
            result.append(tuple(int(m) for m in members))
        return result

    def sort_key(self) -> bytes:
        """Canonical order key: the bit matrix read in row-major order."""
        return self._bits.tobytes()

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryRelation):
            return NotImplemented
        return bool(np.array_equal(self._bits, other._bits))

    @override
    def __hash__(self) -> int:
        return hash((self.n, self._bits.tobytes()))

    @override
    def __repr__(self) -> str:
        return f"BinaryRelation(n={self.n}, pairs={self.nondiagonal_pairs()})"
