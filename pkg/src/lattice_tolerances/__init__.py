from __future__ import annotations

from importlib import metadata

from . import blocks, construction, errors, lattice, quotient, relations, report, sweep
from .blocks import Block, BlockLattice, block_join, block_lattice, block_meet, blocks_of
from .construction import (
    PairedLattice,
    build_paired_lattice,
    verify_image_is_tolerance,
    verify_theorem1,
)
from .lattice import (
    IsoMap,
    Lattice,
    boolean_cube,
    chain,
    direct_product,
    find_isomorphism,
    from_covers,
    named,
)
from .quotient import (
    QuotientLattice,
    alpha_over_gamma,
    kernel,
    verify_theorem2_converse,
    verify_theorem2_forward,
)
from .relations import (
    BinaryRelation,
    EnumerationConfig,
    Homomorphism,
    enumerate_congruences,
    enumerate_tolerances,
    image_relation,
    is_congruence,
    is_homomorphism,
    is_surjective,
    is_tolerance,
    tolerance_generated_by,
)
from .report import Check, VerificationReport
from .sweep import SweepConfig

# lattice_tolerances to lattice-tolerances
__version__ = metadata.version(__name__.replace("_", "-"))


__all__ = [
    "blocks",
    "construction",
    "errors",
    "lattice",
    "quotient",
    "relations",
    "report",
    "sweep",
    "Lattice",
    "IsoMap",
    "from_covers",
    "chain",
    "boolean_cube",
    "named",
    "direct_product",
    "find_isomorphism",
    "BinaryRelation",
    "Homomorphism",
    "EnumerationConfig",
    "is_tolerance",
    "is_congruence",
    "is_homomorphism",
    "is_surjective",
    "image_relation",
    "tolerance_generated_by",
    "enumerate_tolerances",
    "enumerate_congruences",
    "Block",
    "BlockLattice",
    "blocks_of",
    "block_join",
    "block_meet",
    "block_lattice",
    "PairedLattice",
    "build_paired_lattice",
    "verify_theorem1",
    "verify_image_is_tolerance",
    "QuotientLattice",
    "kernel",
    "alpha_over_gamma",
    "verify_theorem2_forward",
    "verify_theorem2_converse",
    "Check",
    "VerificationReport",
    "SweepConfig",
]
