import numpy as np
import pytest

from lattice_tolerances.errors import (
    CycleDetectedError,
    DuplicateLabelError,
    IndexOutOfRangeError,
    NotALatticeError,
    SizeMismatchError,
    UnknownLabelError,
)
from lattice_tolerances.lattice import (
    Lattice,
    boolean_cube,
    chain,
    from_covers,
    named,
    transitive_closure,
)
from lattice_tolerances.testing import corpus


def test_transitive_closure():
    relation = np.zeros((3, 3), dtype=np.bool_)
    relation[0, 1] = relation[1, 2] = True
    closure = transitive_closure(relation)
    assert closure.tolist() == [
        [True, True, True],
        [False, True, True],
        [False, False, True],
    ]


class TestFromCovers:
    def test_two_chain(self):
        lattice = from_covers(["0", "1"], [("0", "1")])
        assert lattice.labels == ("0", "1")
        assert lattice.le(0, 1)
        assert not lattice.le(1, 0)
        assert lattice.join(0, 1) == 1
        assert lattice.meet(0, 1) == 0

    def test_transitive_order(self):
        lattice = from_covers(["0", "a", "1"], [("0", "a"), ("a", "1")])
        assert lattice == chain(3)

    def test_no_upper_bound(self):
        with pytest.raises(NotALatticeError) as info:
            from_covers(["o", "a", "b"], [("o", "a"), ("o", "b")])
        assert (info.value.x, info.value.y) == ("a", "b")
        assert info.value.witness == "have no upper bound"

    def test_no_upper_bound_names_elements_over_a_common_one(self):
        with pytest.raises(NotALatticeError) as info:
            from_covers(["o", "a", "b", "i"], [("o", "a"), ("o", "b")])
        assert (info.value.x, info.value.y) == ("a", "b")
        assert info.value.witness == "have no upper bound"

    def test_isolated_element_is_witness_when_nothing_else_fails(self):
        with pytest.raises(NotALatticeError) as info:
            from_covers(["o", "a", "i"], [("o", "a")])
        assert (info.value.x, info.value.y) == ("o", "i")

    def test_no_least_upper_bound(self):
        covers = [
            ("o", "a"),
            ("o", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "i"),
            ("d", "i"),
        ]
        with pytest.raises(NotALatticeError) as info:
            from_covers(["o", "a", "b", "c", "d", "i"], covers)
        assert (info.value.x, info.value.y) == ("a", "b")
        assert info.value.witness == "have no least upper bound"

    def test_no_lower_bound(self):
        with pytest.raises(NotALatticeError, match="have no lower bound"):
            from_covers(["a", "b", "i"], [("a", "i"), ("b", "i")])

    def test_cycle(self):
        with pytest.raises(CycleDetectedError) as info:
            from_covers(["a", "b"], [("a", "b"), ("b", "a")])
        assert info.value.cycle == ("a", "b", "a")

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabelError):
            from_covers(["a", "a"], [])

    def test_unknown_label(self):
        with pytest.raises(UnknownLabelError):
            from_covers(["a", "b"], [("a", "z")])

    def test_empty(self):
        with pytest.raises(ValueError):
            from_covers([], [])

    @pytest.mark.parametrize("name", list(corpus()))
    def test_covers_round_trip(self, name: str):
        lattice = corpus()[name]
        covers = [(lattice.label(x), lattice.label(y)) for x, y in lattice.covers()]
        rebuilt = from_covers(lattice.labels, covers)
        assert rebuilt == lattice
        assert rebuilt.covers() == lattice.covers()


class TestLattice:
    @pytest.fixture
    def pentagon(self) -> Lattice:
        return named("N5")

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            Lattice(["0", "1"], np.ones((3, 3), dtype=np.bool_))

    def test_not_antisymmetric(self):
        with pytest.raises(NotALatticeError, match="lie below each other"):
            Lattice(["a", "b"], np.ones((2, 2), dtype=np.bool_))

    def test_not_reflexive(self):
        with pytest.raises(NotALatticeError, match="violate reflexivity"):
            Lattice(["a"], np.zeros((1, 1), dtype=np.bool_))

    def test_tables_are_read_only(self, pentagon: Lattice):
        for array in (pentagon.leq, pentagon.join_table, pentagon.meet_table):
            assert not array.flags.writeable
            with pytest.raises(ValueError):
                array[0, 0] = array[0, 0]

    def test_top_and_bottom(self, pentagon: Lattice):
        assert pentagon.label(pentagon.bottom) == "o"
        assert pentagon.label(pentagon.top) == "i"

    def test_index_and_label(self, pentagon: Lattice):
        assert pentagon.index("c") == 3
        assert pentagon.label(3) == "c"
        with pytest.raises(UnknownLabelError):
            pentagon.index("z")
        with pytest.raises(IndexOutOfRangeError):
            pentagon.label(5)

    def test_covers(self, pentagon: Lattice):
        named_covers = {
            (pentagon.label(x), pentagon.label(y)) for x, y in pentagon.covers()
        }
        assert named_covers == {("o", "a"), ("a", "b"), ("b", "i"), ("o", "c"), ("c", "i")}
        assert pentagon.covers() == sorted(pentagon.covers())

    def test_heights(self, pentagon: Lattice):
        assert pentagon.element_heights() == (0, 1, 2, 1, 3)
        assert pentagon.height() == 3
        assert chain(1).height() == 0
        assert boolean_cube(3).height() == 3
        assert named("M3").height() == 2

    @pytest.mark.parametrize(
        "lattice, distributive, modular",
        [
            (chain(4), True, True),
            (boolean_cube(3), True, True),
            (named("M3"), False, True),
            (named("N5"), False, False),
        ],
    )
    def test_distributive_and_modular(
        self, lattice: Lattice, distributive: bool, modular: bool
    ):
        assert lattice.is_distributive() is distributive
        assert lattice.is_modular() is modular

    @pytest.mark.parametrize("name", list(corpus()))
    def test_laws_hold_on_corpus(self, name: str):
        corpus()[name].check_laws()

    def test_from_tables_round_trip(self, pentagon: Lattice):
        rebuilt = Lattice.from_tables(
            pentagon.labels, pentagon.join_table, pentagon.meet_table
        )
        assert rebuilt == pentagon

    def test_from_tables_rejects_inconsistent_meet(self):
        join = [[0, 1], [1, 1]]
        with pytest.raises(NotALatticeError, match="meet entry inconsistent"):
            Lattice.from_tables(["0", "1"], join, join)

    def test_from_tables_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            Lattice.from_tables(["0", "1"], [[0]], [[0]])

    def test_value_semantics(self):
        assert chain(3) == chain(3)
        assert hash(chain(3)) == hash(chain(3))
        assert chain(3) != chain(4)
        assert repr(chain(2)) == "Lattice(n=2, labels=['0', '1'])"
