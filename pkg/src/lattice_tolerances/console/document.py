"""Lattice documents: a JSON object naming elements, covers and relations.

Example::

    {
      "name": "chain3",
      "elements": ["0", "a", "1"],
      "covers": [["0", "a"], ["a", "1"]],
      "relations": {"glued": [["0", "a"], ["a", "1"]]}
    }
"""

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Self

from lattice_tolerances.errors import DocumentError, DuplicateLabelError, UnknownLabelError
from lattice_tolerances.lattice import Lattice, from_covers
from lattice_tolerances.relations import BinaryRelation, tolerance_generated_by

type LabelPair = tuple[str, str]


@dataclass(frozen=True)
class LatticeDocument:
    """Serialized form of a lattice with named relations.

    Attributes:
        name: Name of the lattice, used in reports.
        elements: Distinct element labels.
        covers: `(lower, upper)` label pairs.
        relations: Named lists of label pairs, read as symmetric generators.
    """

    name: str
    elements: tuple[str, ...]
    covers: tuple[LabelPair, ...]
    relations: Mapping[str, tuple[LabelPair, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        declared: set[str] = set()
        for label in self.elements:
            if label in declared:
                raise DuplicateLabelError(label)
            declared.add(label)
        pairs = [*self.covers, *(p for ps in self.relations.values() for p in ps)]
        for pair in pairs:
            for label in pair:
                if label not in declared:
                    raise UnknownLabelError(label)

    @classmethod
    def from_lattice(
        cls,
        name: str,
        lattice: Lattice,
        relations: Mapping[str, BinaryRelation] | None = None,
    ) -> Self:
        """Document describing `lattice` by its covers, with the non-diagonal
        pairs of each relation."""
        labels = lattice.labels
        return cls(
            name=name,
            elements=labels,
            covers=tuple((labels[x], labels[y]) for x, y in lattice.covers()),
            relations={
                key: tuple((labels[x], labels[y]) for x, y in rel.nondiagonal_pairs())
                for key, rel in (relations or {}).items()
            },
        )

    def to_lattice(self) -> Lattice:
        """Build the lattice.

        Raises:
            CycleDetectedError: If the covers have a cycle.
            NotALatticeError: If the order is not a lattice.
        """
        return from_covers(self.elements, self.covers)

    def relation(
        self, lattice: Lattice, name: str, close: bool = False
    ) -> BinaryRelation:
        """The relation called `name` on `lattice`.

        Without `close`, the pairs are completed by their mirrors and the
        diagonal only. With `close`, the smallest tolerance containing
        them is returned.

        Raises:
            DocumentError: If there is no relation called `name`.
        """
        if name not in self.relations:
            raise DocumentError(f"Document '{self.name}' has no relation '{name}'")
        pairs = [(lattice.index(x), lattice.index(y)) for x, y in self.relations[name]]
        if close:
            return tolerance_generated_by(lattice, pairs)
        return BinaryRelation.from_pairs(
            len(lattice), pairs, symmetric=True, reflexive=True
        )

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "name": self.name,
            "elements": list(self.elements),
            "covers": [list(pair) for pair in self.covers],
        }
        if self.relations:
            data["relations"] = {
                key: [list(pair) for pair in pairs]
                for key, pairs in self.relations.items()
            }
        return data


def _label_pairs(value: Any, where: str) -> tuple[LabelPair, ...]:
    if not isinstance(value, list):
        raise DocumentError(f"'{where}' must be a list of pairs")
    pairs: list[LabelPair] = []
    for item in value:  # pyright: ignore[reportUnknownVariableType]
        if not isinstance(item, list) or len(item) != 2:  # pyright: ignore[reportUnknownArgumentType]
            raise DocumentError(f"'{where}' entries must be two-element lists")
        lower, upper = item  # pyright: ignore[reportUnknownVariableType]
        pairs.append((str(lower), str(upper)))  # pyright: ignore[reportUnknownArgumentType]
    return tuple(pairs)


def parse_document(text: str) -> LatticeDocument:
    """Parse a document from JSON text.

    Raises:
        DocumentError: If the text is not a well-formed document.
        DuplicateLabelError: If an element is declared twice.
        UnknownLabelError: If a pair uses an undeclared label.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"Invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise DocumentError("A document must be a JSON object")
    unknown = set(data) - {"name", "elements", "covers", "relations"}  # pyright: ignore[reportUnknownArgumentType]
    if unknown:
        raise DocumentError(f"Unknown fields: {sorted(unknown)}")
    name = data.get("name", "lattice")
    elements = data.get("elements")
    if not isinstance(name, str):
        raise DocumentError("'name' must be a string")
    if not isinstance(elements, list) or not elements:
        raise DocumentError("'elements' must be a nonempty list")
    relations = data.get("relations", {})
    if not isinstance(relations, dict):
        raise DocumentError("'relations' must be an object")
    return LatticeDocument(
        name=name,
        elements=tuple(str(label) for label in elements),  # pyright: ignore[reportUnknownArgumentType, reportUnknownVariableType]
        covers=_label_pairs(data.get("covers", []), "covers"),
        relations={
            str(key): _label_pairs(value, f"relations.{key}")
            for key, value in relations.items()  # pyright: ignore[reportUnknownVariableType]
        },
    )


def serialize_document(document: LatticeDocument) -> str:
    return json.dumps(document.to_dict(), indent=2, ensure_ascii=False) + "\n"


def load_document(path: str | Path) -> LatticeDocument:
    """Read and parse a UTF-8 document file.

    Raises:
        OSError: If the file cannot be read.
        DocumentError: If the file is malformed.
    """
    return parse_document(Path(path).read_text(encoding="utf-8"))


def dump_document(document: LatticeDocument, path: str | Path) -> None:
    Path(path).write_text(serialize_document(document), encoding="utf-8")
