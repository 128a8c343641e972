from .homomorphism import Homomorphism, image_relation, is_homomorphism, is_surjective
from .relation import BinaryRelation, Pair
from .tolerance import (
    EnumerationConfig,
    enumerate_congruences,
    enumerate_tolerances,
    is_congruence,
    is_tolerance,
    resolve_enumeration_config,
    tolerance_generated_by,
)

__all__ = [
    "BinaryRelation",
    "Pair",
    "Homomorphism",
    "image_relation",
    "is_homomorphism",
    "is_surjective",
    "EnumerationConfig",
    "resolve_enumeration_config",
    "is_tolerance",
    "is_congruence",
    "tolerance_generated_by",
    "enumerate_tolerances",
    "enumerate_congruences",
]
