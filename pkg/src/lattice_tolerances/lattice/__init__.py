from .builders import boolean_cube, chain, chain_labels, direct_product, named
from .core import ElementId, Lattice, from_covers, transitive_closure
from .isomorphism import IsoMap, element_profiles, find_isomorphism, is_isomorphism

__all__ = [
    "ElementId",
    "Lattice",
    "from_covers",
    "transitive_closure",
    "chain",
    "chain_labels",
    "boolean_cube",
    "named",
    "direct_product",
    "IsoMap",
    "element_profiles",
    "find_isomorphism",
    "is_isomorphism",
]
