"""Exceptions raised by lattice-tolerances.

Every error derives from `LatticeToleranceError` and from the builtin
exception that best matches it, so callers may catch either.
`InvariantViolationError` and its subclasses signal broken invariants
that the underlying theory guarantees; they indicate a bug, never bad
input.
"""

from collections.abc import Sequence


class LatticeToleranceError(Exception):
    """Base class of all errors in this package."""


class CycleDetectedError(LatticeToleranceError, ValueError):
    """The cover relation contains a directed cycle."""

    def __init__(self, cycle: Sequence[str]) -> None:
        self.cycle = tuple(cycle)
        super().__init__(f"Cover relation has a cycle: {' -> '.join(self.cycle)}")


class NotALatticeError(LatticeToleranceError, ValueError):
    """Some pair of elements lacks a unique least upper or greatest lower
    bound, or the order/tables are inconsistent."""

    def __init__(self, x: str, y: str, witness: str) -> None:
        self.x = x
        self.y = y
        self.witness = witness
        super().__init__(f"Not a lattice: {x} and {y} {witness}")


class DuplicateLabelError(LatticeToleranceError, ValueError):
    """A label is declared more than once."""

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"Duplicate label '{label}'")


class UnknownLabelError(LatticeToleranceError, ValueError):
    """A pair references a label that was not declared."""

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"Unknown label '{label}'")


class UnknownNameError(LatticeToleranceError, ValueError):
    """A named lattice is not recognized."""

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"Unknown lattice name '{name}'")


class SizeMismatchError(LatticeToleranceError, ValueError):
    """A relation or map does not match the size of its lattice."""

    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"Size mismatch: expected {expected}, got {actual}")


class IndexOutOfRangeError(LatticeToleranceError, IndexError):
    """An element id lies outside `0..n-1`."""

    def __init__(self, index: int, size: int) -> None:
        self.index = index
        self.size = size
        super().__init__(f"Element id {index} out of range for size {size}")


class TooLargeError(LatticeToleranceError, ValueError):
    """Brute-force enumeration would exceed the configured cap."""

    def __init__(self, pairs: int, cap: int) -> None:
        self.pairs = pairs
        self.cap = cap
        super().__init__(
            f"Too large to enumerate: {pairs} unordered pairs exceed the cap {cap}"
        )


class NotAToleranceError(LatticeToleranceError, ValueError):
    """The relation is not a tolerance of the lattice."""


class NotACongruenceError(LatticeToleranceError, ValueError):
    """The relation is not a congruence of the lattice."""


class NotAHomomorphismError(LatticeToleranceError, ValueError):
    """The map does not preserve join and meet."""


class NotABlockError(LatticeToleranceError, ValueError):
    """The given set is not a block of the tolerance."""

    def __init__(self, members: Sequence[int]) -> None:
        self.members = tuple(members)
        super().__init__(f"{set(self.members)} is not a block")


class InvariantViolationError(LatticeToleranceError, RuntimeError):
    """An invariant guaranteed by theory failed; this is a bug."""


class UniquenessViolationError(InvariantViolationError):
    """Not exactly one block includes a join (or meet) set."""

    def __init__(
        self, members: Sequence[int], candidates: Sequence[Sequence[int]]
    ) -> None:
        self.members = tuple(members)
        self.candidates = tuple(tuple(c) for c in candidates)
        super().__init__(
            f"Expected exactly one block including {list(self.members)}, "
            f"found {len(self.candidates)}: {[list(c) for c in self.candidates]}"
        )


class ClosureViolationError(InvariantViolationError):
    """The join (or meet) of representatives escapes the joined block."""

    def __init__(self, a: int, x: int, b: int, y: int) -> None:
        self.a = a
        self.x = x
        self.b = b
        self.y = y
        super().__init__(
            f"Operation on ({a}, {x}) and ({b}, {y}) leaves the combined block"
        )


class IsomorphismNotFoundError(InvariantViolationError):
    """No isomorphism exists where one is guaranteed."""


class DocumentError(LatticeToleranceError, ValueError):
    """A lattice document is malformed."""
