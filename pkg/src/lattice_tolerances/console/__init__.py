from .document import (
    LatticeDocument,
    dump_document,
    load_document,
    parse_document,
    serialize_document,
)
from .dot import blocks_dot, block_lattice_dot, hasse_dot, paired_lattice_dot

__all__ = [
    "LatticeDocument",
    "parse_document",
    "serialize_document",
    "load_document",
    "dump_document",
    "hasse_dot",
    "blocks_dot",
    "block_lattice_dot",
    "paired_lattice_dot",
]
