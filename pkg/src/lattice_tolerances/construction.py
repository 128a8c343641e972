"""A tolerance as the homomorphic image of a congruence.

For a tolerance `rho` of `L`, the paired lattice `K` has the elements
`(A, x)` with `A` a block of `rho` and `x` in `A`, and the operations
`(A, x) v (B, y) = (A v B, x v y)` and dually. The relation `theta`
identifying pairs with the same block is a congruence of `K`, the
projection `phi: (A, x) -> x` is a homomorphism of `K` onto `L`, and
`phi(theta) = rho`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from lattice_tolerances.blocks import BlockLattice, block_lattice
from lattice_tolerances.errors import (
    ClosureViolationError,
    InvariantViolationError,
    LatticeToleranceError,
    NotACongruenceError,
    NotAToleranceError,
)
from lattice_tolerances.lattice import ElementId, Lattice
from lattice_tolerances.lattice.core import IndexMatrix
from lattice_tolerances.relations import (
    BinaryRelation,
    Homomorphism,
    image_relation,
    is_congruence,
    is_homomorphism,
    is_surjective,
    is_tolerance,
)
from lattice_tolerances.report import (
    Check,
    VerificationReport,
    difference_witnesses,
    label_pairs,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairedLattice:
    """The lattice K built from a tolerance, with its congruence and
    projection.

    Attributes:
        base: The lattice L.
        rho: The tolerance of L.
        block_lattice: L/rho.
        lattice: K. Element ids enumerate the pairs block-major.
        pairs: `pairs[k] = (block id, element of L)` for every element `k` of K.
        theta: Congruence of K relating pairs with the same block.
        phi: The projection of K onto L.
    """

    base: Lattice
    rho: BinaryRelation
    block_lattice: BlockLattice
    lattice: Lattice
    pairs: tuple[tuple[int, ElementId], ...]
    theta: BinaryRelation
    phi: Homomorphism

    def index_of(self, block_id: int, x: ElementId) -> ElementId:
        """Element id of the pair `(block_id, x)` in K.

        Raises:
            KeyError: If `x` is not a member of that block.
        """
        try:
            return self.pairs.index((block_id, x))
        except ValueError:
            raise KeyError(f"({block_id}, {x}) is not an element of K") from None

    def theta_classes(self) -> list[tuple[ElementId, ...]]:
        return self.theta.classes()


@dataclass(frozen=True)
class _Assembly:
    block_lattice: BlockLattice
    lattice: Lattice
    pairs: tuple[tuple[int, ElementId], ...]
    theta: BinaryRelation
    projection: tuple[ElementId, ...]


def _operation_table(
    blocks: BlockLattice,
    pairs: list[tuple[int, ElementId]],
    index: dict[tuple[int, ElementId], int],
    block_table: IndexMatrix,
    base_table: IndexMatrix,
) -> IndexMatrix:
    size = len(pairs)
    table = np.empty((size, size), dtype=np.intp)
    for i, (a, x) in enumerate(pairs):
        for j, (b, y) in enumerate(pairs):
            combined = int(block_table[a, b])
            z = int(base_table[x, y])
            if z not in blocks.blocks[combined]:
                logger.error(f"Pair operation on ({a}, {x}), ({b}, {y}) leaves block {combined}")
                raise ClosureViolationError(a, x, b, y)
            table[i, j] = index[(combined, z)]
    return table


def _assemble(lattice: Lattice, rho: BinaryRelation) -> _Assembly:
    if not is_tolerance(lattice, rho):
        raise NotAToleranceError("The paired lattice is built from a tolerance")
    blocks = block_lattice(lattice, rho)
    pairs = [(a, x) for a, block in enumerate(blocks.blocks) for x in block]
    index = {pair: k for k, pair in enumerate(pairs)}
    join = _operation_table(
        blocks, pairs, index, blocks.lattice.join_table, lattice.join_table
    )
    meet = _operation_table(
        blocks, pairs, index, blocks.lattice.meet_table, lattice.meet_table
    )
    labels = [f"{blocks.lattice.labels[a]}:{lattice.labels[x]}" for a, x in pairs]
    paired = Lattice.from_tables(labels, join, meet)
    block_ids = np.asarray([a for a, _ in pairs], dtype=np.intp)
    theta = BinaryRelation(block_ids[:, None] == block_ids[None, :])
    logger.debug(
        f"Built K with {len(pairs)} elements over {len(blocks.blocks)} blocks"
    )
    return _Assembly(
        block_lattice=blocks,
        lattice=paired,
        pairs=tuple(pairs),
        theta=theta,
        projection=tuple(x for _, x in pairs),
    )


def build_paired_lattice(lattice: Lattice, rho: BinaryRelation) -> PairedLattice:
    """Build K, theta and phi for the tolerance `rho` of `lattice`.

    Raises:
        NotAToleranceError: If `rho` is not a tolerance.
        ClosureViolationError: If a join or meet of representatives leaves
            the combined block.
        UniquenessViolationError: Propagated from the block lattice.
        NotALatticeError: If K fails lattice validation.
        InvariantViolationError: If theta is not a congruence or phi is not
            a surjective homomorphism.
    """
    assembly = _assemble(lattice, rho)
    if not is_congruence(assembly.lattice, assembly.theta):
        logger.error("theta is not a congruence of K")
        raise InvariantViolationError("theta is not a congruence of K")
    phi = Homomorphism(assembly.lattice, lattice, assembly.projection)
    if not is_surjective(phi):
        logger.error("phi is not onto L")
        raise InvariantViolationError("phi is not onto L")
    return PairedLattice(
        base=lattice,
        rho=rho,
        block_lattice=assembly.block_lattice,
        lattice=assembly.lattice,
        pairs=assembly.pairs,
        theta=assembly.theta,
        phi=phi,
    )


def _shared_block_relation(blocks: BlockLattice) -> BinaryRelation:
    n = len(blocks.base)
    bits = np.zeros((n, n), dtype=np.bool_)
    for block in blocks.blocks:
        members = np.asarray(block.members, dtype=np.intp)
        bits[np.ix_(members, members)] = True
    return BinaryRelation(bits)


def verify_theorem1(
    lattice: Lattice, rho: BinaryRelation, subject: str = ""
) -> VerificationReport:
    """Check that `rho` is the image of the congruence theta of K under phi.

    Checks that K is a lattice, theta is a congruence, phi is a surjective
    homomorphism, `|K|` is the sum of the block sizes, two elements are
    related by `rho` iff some block contains both, and `phi(theta) = rho`
    bit for bit.

    Args:
        lattice: The lattice L.
        rho: A tolerance of L.
        subject: Name used in the report.

    Raises:
        NotAToleranceError: If `rho` is not a tolerance.
    """
    if not is_tolerance(lattice, rho):
        raise NotAToleranceError("Theorem 1 is stated for tolerances")
    subject = subject or f"theorem1 on {len(lattice)}-element lattice"
    try:
        assembly = _assemble(lattice, rho)
    except LatticeToleranceError as e:
        logger.error(f"Construction of K failed for {subject}: {e}")
        return VerificationReport(
            subject, (Check("K is a lattice", False, detail=str(e)),)
        )

    paired, theta = assembly.lattice, assembly.theta
    checks = [Check("K is a lattice", True)]
    checks.append(Check("theta is a congruence of K", is_congruence(paired, theta)))
    homomorphic = is_homomorphism(paired, lattice, assembly.projection)
    checks.append(Check("phi is a homomorphism", homomorphic))
    onto = set(assembly.projection) == set(range(len(lattice)))
    missing = sorted(set(range(len(lattice))) - set(assembly.projection))
    checks.append(
        Check("phi is onto L", onto, detail=", ".join(lattice.labels[x] for x in missing))
    )
    block_sizes = sum(len(block) for block in assembly.block_lattice.blocks)
    checks.append(
        Check(
            "K size",
            len(paired) == block_sizes,
            detail=f"|K| = {len(paired)}, sum of block sizes = {block_sizes}",
        )
    )
    shared = _shared_block_relation(assembly.block_lattice)
    checks.append(
        Check(
            "blocks cover rho",
            shared == rho,
            witnesses=difference_witnesses(lattice.labels, rho, shared),
        )
    )
    if homomorphic:
        phi = Homomorphism(paired, lattice, assembly.projection)
        image = image_relation(phi, theta)
        checks.append(Check("phi(theta) is a tolerance of L", is_tolerance(lattice, image)))
        checks.append(
            Check(
                "phi(theta) = rho",
                image == rho,
                witnesses=difference_witnesses(lattice.labels, rho, image),
            )
        )
    else:
        checks.append(Check("phi(theta) = rho", False, detail="phi is not a homomorphism"))
    return VerificationReport(subject, tuple(checks), summary=f"|K| = {len(paired)}")


def verify_image_is_tolerance(
    phi: Homomorphism, theta: BinaryRelation, subject: str = ""
) -> VerificationReport:
    """Check that the image of a congruence under a surjective homomorphism
    is a tolerance of the codomain.

    Raises:
        NotACongruenceError: If `theta` is not a congruence of `phi.dom`.
    """
    if not is_congruence(phi.dom, theta):
        raise NotACongruenceError("The image check starts from a congruence")
    subject = subject or "image of a congruence"
    image = image_relation(phi, theta)
    checks = (
        Check("phi is onto", is_surjective(phi)),
        Check("phi(theta) is reflexive", image.is_reflexive()),
        Check(
            "phi(theta) is symmetric",
            image.is_symmetric(),
            witnesses=label_pairs(
                phi.cod.labels, [(x, y) for x, y in image.pairs() if (y, x) not in image]
            ),
        ),
        Check("phi(theta) is a tolerance", is_tolerance(phi.cod, image)),
    )
    return VerificationReport(subject, checks)
