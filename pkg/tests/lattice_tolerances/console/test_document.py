import json
from pathlib import Path

import pytest

from lattice_tolerances.console.document import (
    LatticeDocument,
    dump_document,
    load_document,
    parse_document,
    serialize_document,
)
from lattice_tolerances.errors import (
    CycleDetectedError,
    DocumentError,
    DuplicateLabelError,
    UnknownLabelError,
)
from lattice_tolerances.lattice import chain, named
from lattice_tolerances.relations import BinaryRelation
from lattice_tolerances.testing import glued_tolerance

GLUED = {
    "name": "chain3",
    "elements": ["0", "a", "1"],
    "covers": [["0", "a"], ["a", "1"]],
    "relations": {"glued": [["0", "a"], ["a", "1"]], "ends": [["0", "1"]]},
}


class TestParseDocument:
    @pytest.fixture
    def document(self) -> LatticeDocument:
        return parse_document(json.dumps(GLUED))

    def test_fields(self, document: LatticeDocument):
        assert document.name == "chain3"
        assert document.elements == ("0", "a", "1")
        assert document.covers == (("0", "a"), ("a", "1"))
        assert document.relations["glued"] == (("0", "a"), ("a", "1"))

    def test_to_lattice(self, document: LatticeDocument):
        assert document.to_lattice() == chain(3)

    def test_relation_verbatim(self, document: LatticeDocument):
        lattice = document.to_lattice()
        assert document.relation(lattice, "glued") == glued_tolerance(lattice)
        ends = document.relation(lattice, "ends")
        assert ends == BinaryRelation.from_pairs(3, [(0, 2)], symmetric=True, reflexive=True)

    def test_relation_closed(self, document: LatticeDocument):
        lattice = document.to_lattice()
        assert document.relation(lattice, "ends", close=True) == BinaryRelation.full(3)

    def test_unknown_relation(self, document: LatticeDocument):
        with pytest.raises(DocumentError, match="no relation 'missing'"):
            document.relation(document.to_lattice(), "missing")

    def test_defaults(self):
        document = parse_document('{"elements": ["x"]}')
        assert document.name == "lattice"
        assert document.covers == ()
        assert dict(document.relations) == {}
        assert len(document.to_lattice()) == 1

    @pytest.mark.parametrize(
        "text",
        [
            "{not json",
            "[1, 2]",
            '{"elements": []}',
            '{"elements": ["a"], "extra": 1}',
            '{"name": 3, "elements": ["a"]}',
            '{"elements": ["a", "b"], "covers": [["a"]]}',
            '{"elements": ["a", "b"], "covers": {"a": "b"}}',
            '{"elements": ["a"], "relations": []}',
        ],
    )
    def test_malformed(self, text: str):
        with pytest.raises(DocumentError):
            parse_document(text)

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabelError):
            parse_document('{"elements": ["a", "a"]}')

    def test_unknown_label(self):
        with pytest.raises(UnknownLabelError):
            parse_document('{"elements": ["a"], "relations": {"r": [["a", "b"]]}}')

    def test_cycle_surfaces_on_build(self):
        document = parse_document(
            '{"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}'
        )
        with pytest.raises(CycleDetectedError):
            document.to_lattice()


class TestRoundTrip:
    def test_text(self):
        document = parse_document(json.dumps(GLUED))
        text = serialize_document(document)
        assert text.endswith("}\n")
        assert parse_document(text) == document
        assert json.loads(text) == GLUED

    def test_file(self, tmp_path: Path):
        document = LatticeDocument.from_lattice(
            "N5", named("N5"), {"top": BinaryRelation.from_pairs(
                5, [(3, 4)], symmetric=True, reflexive=True
            )}
        )
        path = tmp_path / "n5.json"
        dump_document(document, path)
        assert load_document(path) == document
        assert load_document(path).to_lattice() == named("N5")

    def test_from_lattice(self):
        three = chain(3)
        document = LatticeDocument.from_lattice(
            "chain3", three, {"glued": glued_tolerance(three)}
        )
        assert document.to_dict() == {
            "name": "chain3",
            "elements": ["0", "a", "1"],
            "covers": [["0", "a"], ["a", "1"]],
            "relations": {"glued": [["0", "a"], ["a", "1"]]},
        }

    def test_missing_file(self, tmp_path: Path):
        with pytest.raises(OSError):
            load_document(tmp_path / "missing.json")
