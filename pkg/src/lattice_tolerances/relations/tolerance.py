"""Tolerances and congruences: predicates, generation and enumeration."""

import logging
import time
from collections.abc import Iterable, Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from lattice_tolerances.errors import IndexOutOfRangeError, TooLargeError
from lattice_tolerances.lattice.core import IndexMatrix, Lattice

from .relation import BinaryRelation, Pair

logger = logging.getLogger(__name__)

type BoolBatch = npt.NDArray[np.bool_]


@dataclass(frozen=True)
class EnumerationConfig:
    """Parameters of the brute-force enumerators.

    Attributes:
        cap: Largest admissible number of unordered non-diagonal pairs
            `p = n(n-1)/2`; `2^p` candidate relations are tested.
        chunk_size: Number of candidates tested per vectorised batch.
        max_workers: Worker threads sharing the batches. The result is
            sorted canonically and does not depend on this value.
    """

    cap: int = 24
    chunk_size: int = 4096
    max_workers: int = 1

    def __post_init__(self) -> None:
        if self.cap < 0:
            raise ValueError("cap must be non-negative")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be positive")
        if self.max_workers < 1:
            raise ValueError("max_workers must be positive")


def resolve_enumeration_config(
    config: Mapping[str, Any] | EnumerationConfig | None,
) -> EnumerationConfig:
    if config is None:
        return EnumerationConfig()
    if isinstance(config, EnumerationConfig):
        return config
    return EnumerationConfig(**config)


def _substitution_holds(bits: BoolBatch, table: IndexMatrix) -> BoolBatch:
    """For a batch of relations, whether `(a, b)` and `(c, d)` related
    always imply `(a*c, b*d)` related, for the operation `table`.

    Args:
        bits: Relations of shape `(batch, n, n)`.
        table: Operation table of shape `(n, n)`.

    Returns:
        Boolean vector of shape `(batch,)`.
    """
    # Axes are (a, b, c, d).
    closed = bits[:, table[:, None, :, None], table[None, :, None, :]]
    premise = bits[:, :, :, None, None] & bits[:, None, None, :, :]
    return (closed | ~premise).reshape(len(bits), -1).all(axis=1)


def _transitive(bits: BoolBatch) -> BoolBatch:
    as_int = bits.astype(np.intp)
    composed = np.matmul(as_int, as_int) > 0
    return ~(composed & ~bits).reshape(len(bits), -1).any(axis=1)


def _compatible(lattice: Lattice, bits: BoolBatch) -> BoolBatch:
    return _substitution_holds(bits, lattice.join_table) & _substitution_holds(
        bits, lattice.meet_table
    )


def is_tolerance(lattice: Lattice, relation: BinaryRelation) -> bool:
    """Whether `relation` is reflexive, symmetric and has the Substitution
    Property for join and meet.

    Raises:
        SizeMismatchError: If `relation` is not sized for `lattice`.
    """
    relation.check_size(len(lattice))
    if not (relation.is_reflexive() and relation.is_symmetric()):
        return False
    return bool(_compatible(lattice, relation.bits[None, :, :])[0])


def is_congruence(lattice: Lattice, relation: BinaryRelation) -> bool:
    """Whether `relation` is a transitive tolerance.

    Raises:
        SizeMismatchError: If `relation` is not sized for `lattice`.
    """
    return is_tolerance(lattice, relation) and relation.is_transitive()


def tolerance_generated_by(lattice: Lattice, pairs: Iterable[Pair]) -> BinaryRelation:
    """The smallest tolerance containing `pairs`.

    Worklist fixpoint: start from the diagonal plus the pairs and their
    mirrors; every newly added pair is combined with every pair present
    by join and by meet, and missing results (with mirrors) are added
    and queued. The relation only grows inside a finite matrix, so the
    loop terminates.

    Raises:
        IndexOutOfRangeError: If a pair references an id outside the lattice.
    """
    n = len(lattice)
    join, meet = lattice.join_table, lattice.meet_table
    bits = np.eye(n, dtype=np.bool_)
    worklist: list[Pair] = []

    def add(x: int, y: int) -> None:
        for pair in ((x, y), (y, x)):
            if not bits[pair]:
                bits[pair] = True
                worklist.append(pair)

    for x, y in pairs:
        for element in (x, y):
            if not 0 <= element < n:
                raise IndexOutOfRangeError(element, n)
        add(x, y)
    while worklist:
        a, b = worklist.pop()
        for c, d in np.argwhere(bits):
            add(int(join[a, c]), int(join[b, d]))
            add(int(meet[a, c]), int(meet[b, d]))
    return BinaryRelation(bits)


def _candidates(n: int, start: int, stop: int) -> BoolBatch:
    """Symmetric reflexive relations numbered `start..stop-1`.

    Bit `i` of a candidate's number decides the `i`-th pair above the
    diagonal in row-major order.
    """
    upper_rows, upper_cols = np.triu_indices(n, 1)
    masks = np.arange(start, stop, dtype=np.int64)
    chosen = ((masks[:, None] >> np.arange(len(upper_rows))) & 1).astype(np.bool_)
    bits = np.repeat(np.eye(n, dtype=np.bool_)[None, :, :], len(masks), axis=0)
    bits[:, upper_rows, upper_cols] = chosen
    bits[:, upper_cols, upper_rows] = chosen
    return bits


def _enumerate(
    lattice: Lattice,
    transitive: bool,
    config: Mapping[str, Any] | EnumerationConfig | None,
) -> list[BinaryRelation]:
    config = resolve_enumeration_config(config)
    n = len(lattice)
    pair_count = n * (n - 1) // 2
    if pair_count > config.cap:
        raise TooLargeError(pair_count, config.cap)

    total = 1 << pair_count
    chunks = [
        (start, min(start + config.chunk_size, total))
        for start in range(0, total, config.chunk_size)
    ]

    def test_chunk(chunk: tuple[int, int]) -> list[BinaryRelation]:
        bits = _candidates(n, *chunk)
        keep = _compatible(lattice, bits)
        if transitive:
            keep &= _transitive(bits)
        return [BinaryRelation(relation) for relation in bits[keep]]

    started = time.perf_counter()
    if config.max_workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
            found = list(executor.map(test_chunk, chunks))
    else:
        found = [test_chunk(chunk) for chunk in chunks]
    relations = sorted(
        (relation for batch in found for relation in batch),
        key=BinaryRelation.sort_key,
    )
    kind = "congruences" if transitive else "tolerances"
    logger.debug(
        f"Tested {total} candidates on {n} elements: {len(relations)} {kind} "
        f"in {time.perf_counter() - started:.3f}s"
    )
    return relations


def enumerate_tolerances(
    lattice: Lattice, config: Mapping[str, Any] | EnumerationConfig | None = None
) -> list[BinaryRelation]:
    """All tolerances of `lattice` in canonical order.

    Every symmetric reflexive relation is tested with the tolerance
    filter, so the result is exactly the filter's output.

    Raises:
        TooLargeError: If `n(n-1)/2` exceeds `config.cap`.
    """
    return _enumerate(lattice, False, config)


def enumerate_congruences(
    lattice: Lattice, config: Mapping[str, Any] | EnumerationConfig | None = None
) -> list[BinaryRelation]:
    """All congruences of `lattice` in canonical order.

    Raises:
        TooLargeError: If `n(n-1)/2` exceeds `config.cap`.
    """
    return _enumerate(lattice, True, config)
