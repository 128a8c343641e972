"""Lattice homomorphisms and images of relations under them."""

from __future__ import annotations

from collections.abc import Sequence
from typing import override

import numpy as np

from lattice_tolerances.errors import (
    IndexOutOfRangeError,
    NotAHomomorphismError,
    SizeMismatchError,
)
from lattice_tolerances.lattice.core import ElementId, IndexMatrix, Lattice

from .relation import BinaryRelation


def _as_map(dom: Lattice, cod: Lattice, mapping: Sequence[int]) -> IndexMatrix:
    image = np.asarray(mapping, dtype=np.intp)
    if image.shape != (len(dom),):
        raise SizeMismatchError(len(dom), len(image))
    for value in image:
        if not 0 <= value < len(cod):
            raise IndexOutOfRangeError(int(value), len(cod))
    return image


def is_homomorphism(dom: Lattice, cod: Lattice, mapping: Sequence[int]) -> bool:
    """Whether `mapping` preserves join and meet.

    Args:
        dom: Domain lattice.
        cod: Codomain lattice.
        mapping: `mapping[x]` is the image of element `x` of `dom`.

    Raises:
        SizeMismatchError: If `mapping` does not have one entry per element.
        IndexOutOfRangeError: If an image is not an element of `cod`.
    """
    image = _as_map(dom, cod, mapping)
    pairwise = (image[:, None], image[None, :])
    return bool(
        np.array_equal(image[dom.join_table], cod.join_table[pairwise])
        and np.array_equal(image[dom.meet_table], cod.meet_table[pairwise])
    )


class Homomorphism:
    """A join- and meet-preserving map, validated at construction."""

    __slots__ = ("_dom", "_cod", "_map")

    def __init__(self, dom: Lattice, cod: Lattice, mapping: Sequence[int]) -> None:
        """
        Raises:
            SizeMismatchError: If `mapping` does not have one entry per element.
            IndexOutOfRangeError: If an image is not an element of `cod`.
            NotAHomomorphismError: If join or meet is not preserved.
        """
        if not is_homomorphism(dom, cod, mapping):
            raise NotAHomomorphismError(
                f"Map {list(mapping)} does not preserve join and meet"
            )
        self._dom = dom
        self._cod = cod
        self._map = tuple(int(y) for y in mapping)

    @classmethod
    def identity(cls, lattice: Lattice) -> Homomorphism:
        return cls(lattice, lattice, range(len(lattice)))

    @classmethod
    def constant(cls, dom: Lattice, cod: Lattice, value: ElementId) -> Homomorphism:
        return cls(dom, cod, [value] * len(dom))

    @property
    def dom(self) -> Lattice:
        return self._dom

    @property
    def cod(self) -> Lattice:
        return self._cod

    @property
    def map(self) -> tuple[ElementId, ...]:
        return self._map

    def __call__(self, x: ElementId) -> ElementId:
        return self._map[x]

    def compose(self, after: Homomorphism) -> Homomorphism:
        """The homomorphism `after . self`."""
        if after.dom is not self._cod and after.dom != self._cod:
            raise SizeMismatchError(len(self._cod), len(after.dom))
        return Homomorphism(self._dom, after.cod, [after(y) for y in self._map])

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return (
            self._dom == other._dom
            and self._cod == other._cod
            and self._map == other._map
        )

    @override
    def __hash__(self) -> int:
        return hash((self._dom, self._cod, self._map))

    @override
    def __repr__(self) -> str:
        return f"Homomorphism(map={list(self._map)})"


def is_surjective(phi: Homomorphism) -> bool:
    return len(set(phi.map)) == len(phi.cod)


def image_relation(phi: Homomorphism, theta: BinaryRelation) -> BinaryRelation:
    """The relation `{(phi(x), phi(y)) | (x, y) in theta}` on the codomain.

    Raises:
        SizeMismatchError: If `theta` is not a relation on `phi.dom`.
    """
    theta.check_size(len(phi.dom))
    image = np.asarray(phi.map, dtype=np.intp)
    bits = np.zeros((len(phi.cod), len(phi.cod)), dtype=np.bool_)
    xs, ys = np.nonzero(theta.bits)
    bits[image[xs], image[ys]] = True
    return BinaryRelation(bits)
