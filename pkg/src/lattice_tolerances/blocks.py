"""Blocks of a tolerance and the block lattice L/rho.

A block is a maximal subset `X` of the lattice with `X x X` inside the
tolerance, i.e. a maximal clique of the tolerance viewed as a graph.
The join of two blocks `A` and `B` is the unique block that includes
`{a v b | a in A, b in B}`, and dually for the meet.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

from lattice_tolerances.errors import (
    NotABlockError,
    NotAToleranceError,
    UniquenessViolationError,
)
from lattice_tolerances.lattice import ElementId, Lattice
from lattice_tolerances.lattice.core import IndexMatrix
from lattice_tolerances.relations import BinaryRelation, is_tolerance

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Block:
    """A block, stored as its sorted member ids."""

    members: tuple[ElementId, ...]

    def __post_init__(self) -> None:
        if list(self.members) != sorted(set(self.members)):
            raise ValueError(f"Block members must be sorted and distinct: {self.members}")

    @classmethod
    def of(cls, members: Iterable[ElementId]) -> Block:
        return cls(tuple(sorted({int(m) for m in members})))

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[ElementId]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def includes(self, elements: Iterable[ElementId]) -> bool:
        return set(elements) <= set(self.members)

    def label(self, lattice: Lattice) -> str:
        return "{" + ",".join(lattice.labels[x] for x in self.members) + "}"


@dataclass(frozen=True)
class BlockLattice:
    """The lattice of all blocks of a tolerance.

    Attributes:
        base: The underlying lattice L.
        rho: The tolerance.
        blocks: All blocks in canonical order; a block's id is its position.
        lattice: The lattice structure on block ids.
    """

    base: Lattice
    rho: BinaryRelation
    blocks: tuple[Block, ...]
    lattice: Lattice

    def index(self, block: Block) -> int:
        """Id of `block`.

        Raises:
            NotABlockError: If `block` is not a block of `rho`.
        """
        try:
            return self.blocks.index(block)
        except ValueError:
            raise NotABlockError(block.members) from None

    def blocks_containing(self, x: ElementId) -> list[int]:
        return [i for i, block in enumerate(self.blocks) if x in block]


def blocks_of(lattice: Lattice, rho: BinaryRelation) -> list[Block]:
    """All blocks of the tolerance `rho`, sorted.

    Blocks are the maximal cliques of the graph whose edges are the
    non-diagonal pairs of `rho`, found by Bron-Kerbosch with pivoting
    (`networkx.find_cliques`). Isolated elements form singleton blocks.

    Raises:
        NotAToleranceError: If `rho` is not a tolerance of `lattice`.
    """
    if not is_tolerance(lattice, rho):
        raise NotAToleranceError("Blocks are only defined for tolerances")
    graph: nx.Graph[int] = nx.Graph()
    graph.add_nodes_from(range(len(lattice)))
    graph.add_edges_from((int(x), int(y)) for x, y in np.argwhere(np.triu(rho.bits, 1)))
    blocks = sorted(Block.of(clique) for clique in nx.find_cliques(graph))
    logger.debug(f"Found {len(blocks)} blocks on {len(lattice)} elements")
    return blocks


def _unique_block_including(
    blocks: Sequence[Block], elements: set[ElementId]
) -> int:
    candidates = [i for i, block in enumerate(blocks) if block.includes(elements)]
    if len(candidates) != 1:
        logger.error(
            f"{len(candidates)} blocks include {sorted(elements)}; expected exactly one"
        )
        raise UniquenessViolationError(
            sorted(elements), [blocks[i].members for i in candidates]
        )
    return candidates[0]


def _combine(
    blocks: Sequence[Block], table: IndexMatrix, first: Block, second: Block
) -> int:
    image = {int(table[a, b]) for a in first for b in second}
    return _unique_block_including(blocks, image)


def block_join(block_lattice: BlockLattice, first: Block, second: Block) -> Block:
    """The unique block including `{a v b | a in first, b in second}`.

    Raises:
        NotABlockError: If an argument is not a block.
        UniquenessViolationError: If not exactly one block includes the set.
    """
    block_lattice.index(first)
    block_lattice.index(second)
    table = block_lattice.base.join_table
    return block_lattice.blocks[_combine(block_lattice.blocks, table, first, second)]


def block_meet(block_lattice: BlockLattice, first: Block, second: Block) -> Block:
    """The unique block including `{a ^ b | a in first, b in second}`.

    Raises:
        NotABlockError: If an argument is not a block.
        UniquenessViolationError: If not exactly one block includes the set.
    """
    block_lattice.index(first)
    block_lattice.index(second)
    table = block_lattice.base.meet_table
    return block_lattice.blocks[_combine(block_lattice.blocks, table, first, second)]


def block_lattice(lattice: Lattice, rho: BinaryRelation) -> BlockLattice:
    """Assemble the block lattice L/rho.

    Join and meet tables are filled block by block and the result goes
    through the full lattice validation of `Lattice.from_tables`.

    Raises:
        NotAToleranceError: If `rho` is not a tolerance of `lattice`.
        UniquenessViolationError: If a join or meet set is not included in
            exactly one block.
        NotALatticeError: If the tables fail validation.
    """
    blocks = blocks_of(lattice, rho)
    count = len(blocks)
    join = np.empty((count, count), dtype=np.intp)
    meet = np.empty((count, count), dtype=np.intp)
    for i, first in enumerate(blocks):
        for j, second in enumerate(blocks):
            join[i, j] = _combine(blocks, lattice.join_table, first, second)
            meet[i, j] = _combine(blocks, lattice.meet_table, first, second)
    labels = [block.label(lattice) for block in blocks]
    return BlockLattice(
        base=lattice,
        rho=rho,
        blocks=tuple(blocks),
        lattice=Lattice.from_tables(labels, join, meet),
    )
