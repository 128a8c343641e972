import itertools
import random
from dataclasses import FrozenInstanceError

import pytest

from lattice_tolerances.errors import (
    IndexOutOfRangeError,
    SizeMismatchError,
    TooLargeError,
)
from lattice_tolerances.lattice import Lattice, boolean_cube, chain, named
from lattice_tolerances.relations import (
    BinaryRelation,
    EnumerationConfig,
    enumerate_congruences,
    enumerate_tolerances,
    is_congruence,
    is_tolerance,
    resolve_enumeration_config,
    tolerance_generated_by,
)
from lattice_tolerances.testing import corpus, generated_tolerance_oracle, glued_tolerance

ENUMERABLE = {name: lattice for name, lattice in corpus().items() if name != "cube3"}


def naive_is_tolerance(lattice: Lattice, relation: BinaryRelation) -> bool:
    """Quadruple loop over the Substitution Property."""
    if not (relation.is_reflexive() and relation.is_symmetric()):
        return False
    related = relation.pairs()
    for (a, b), (c, d) in itertools.product(related, related):
        if (lattice.join(a, c), lattice.join(b, d)) not in relation:
            return False
        if (lattice.meet(a, c), lattice.meet(b, d)) not in relation:
            return False
    return True


def naive_tolerances(lattice: Lattice) -> list[BinaryRelation]:
    n = len(lattice)
    upper = [(x, y) for x in range(n) for y in range(x + 1, n)]
    found: list[BinaryRelation] = []
    for size in range(len(upper) + 1):
        for chosen in itertools.combinations(upper, size):
            relation = BinaryRelation.from_pairs(
                n, chosen, symmetric=True, reflexive=True
            )
            if naive_is_tolerance(lattice, relation):
                found.append(relation)
    return found


class TestEnumerationConfig:
    def test_defaults(self):
        config = EnumerationConfig()
        assert (config.cap, config.chunk_size, config.max_workers) == (24, 4096, 1)

    def test_frozen(self):
        config = EnumerationConfig()
        with pytest.raises(FrozenInstanceError):
            config.cap = 0  # pyright: ignore[reportAttributeAccessIssue]

    @pytest.mark.parametrize(
        "values", [{"cap": -1}, {"chunk_size": 0}, {"max_workers": 0}]
    )
    def test_invalid(self, values: dict[str, int]):
        with pytest.raises(ValueError):
            EnumerationConfig(**values)

    def test_resolve(self):
        assert resolve_enumeration_config(None) == EnumerationConfig()
        assert resolve_enumeration_config({"cap": 3}) == EnumerationConfig(cap=3)
        config = EnumerationConfig(chunk_size=8)
        assert resolve_enumeration_config(config) is config


class TestIsTolerance:
    def test_glued(self):
        three = chain(3)
        glued = glued_tolerance(three)
        assert is_tolerance(three, glued)
        assert not is_congruence(three, glued)

    def test_bottom_top_only_is_not_a_tolerance(self):
        three = chain(3)
        relation = BinaryRelation.from_pairs(3, [(0, 2)], symmetric=True, reflexive=True)
        assert not is_tolerance(three, relation)

    def test_requires_reflexive_and_symmetric(self):
        assert not is_tolerance(chain(2), BinaryRelation.from_pairs(2, [(0, 1)]))
        assert not is_tolerance(
            chain(2), BinaryRelation.from_pairs(2, [(0, 1)], reflexive=True)
        )

    def test_diagonal_and_full(self):
        for lattice in corpus().values():
            n = len(lattice)
            assert is_congruence(lattice, BinaryRelation.diagonal(n))
            assert is_congruence(lattice, BinaryRelation.full(n))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            is_tolerance(chain(3), BinaryRelation.diagonal(2))


class TestEnumerate:
    @pytest.mark.parametrize(
        "n, tolerances, congruences",
        [(1, 1, 1), (2, 2, 2), (3, 5, 4), (4, 14, 8), (5, 42, 16), (6, 132, 32)],
    )
    def test_chain_counts(self, n: int, tolerances: int, congruences: int):
        assert len(enumerate_tolerances(chain(n))) == tolerances
        assert len(enumerate_congruences(chain(n))) == congruences

    @pytest.mark.parametrize(
        "name, congruences",
        [("M3", 2), ("N5", 5), ("cube2", 4), ("chain2xchain3", 8)],
    )
    def test_congruence_counts(self, name: str, congruences: int):
        assert len(enumerate_congruences(corpus()[name])) == congruences

    @pytest.mark.parametrize(
        "name, tolerances",
        [("M3", 2), ("N5", 5), ("cube2", 4), ("chain2xchain3", 10)],
    )
    def test_tolerance_counts(self, name: str, tolerances: int):
        assert len(enumerate_tolerances(corpus()[name])) == tolerances

    @pytest.mark.parametrize("name", ["M3", "N5", "cube2"])
    def test_every_tolerance_is_a_congruence(self, name: str):
        lattice = corpus()[name]
        assert enumerate_tolerances(lattice) == enumerate_congruences(lattice)

    @pytest.mark.parametrize(
        "name", [name for name, lattice in ENUMERABLE.items() if len(lattice) <= 5]
    )
    def test_matches_naive_filter(self, name: str):
        lattice = ENUMERABLE[name]
        expected = sorted(naive_tolerances(lattice), key=BinaryRelation.sort_key)
        assert enumerate_tolerances(lattice) == expected

    def test_canonical_order(self):
        tolerances = enumerate_tolerances(named("N5"))
        assert tolerances == sorted(tolerances, key=BinaryRelation.sort_key)
        assert tolerances[0] == BinaryRelation.diagonal(5)
        assert tolerances[-1] == BinaryRelation.full(5)

    def test_congruences_are_transitive_tolerances(self):
        lattice = ENUMERABLE["chain2xchain3"]
        tolerances = enumerate_tolerances(lattice)
        assert enumerate_congruences(lattice) == [
            relation for relation in tolerances if relation.is_transitive()
        ]

    def test_parallel_matches_serial(self):
        lattice = chain(5)
        parallel = enumerate_tolerances(
            lattice, EnumerationConfig(chunk_size=64, max_workers=4)
        )
        assert parallel == enumerate_tolerances(lattice)

    def test_too_large(self):
        with pytest.raises(TooLargeError) as info:
            enumerate_tolerances(boolean_cube(3))
        assert (info.value.pairs, info.value.cap) == (28, 24)

    def test_cap_from_mapping(self):
        with pytest.raises(TooLargeError):
            enumerate_congruences(chain(3), {"cap": 2})


class TestToleranceGeneratedBy:
    def test_examples(self):
        three = chain(3)
        assert tolerance_generated_by(three, []) == BinaryRelation.diagonal(3)
        assert tolerance_generated_by(three, [(0, 2)]) == BinaryRelation.full(3)
        assert tolerance_generated_by(three, [(0, 1), (1, 2)]) == glued_tolerance(three)
        assert tolerance_generated_by(three, [(1, 0)]) == BinaryRelation.from_pairs(
            3, [(0, 1)], symmetric=True, reflexive=True
        )

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            tolerance_generated_by(chain(2), [(0, 3)])

    @pytest.mark.parametrize("name", list(ENUMERABLE))
    def test_minimality(self, name: str):
        lattice = ENUMERABLE[name]
        n = len(lattice)
        tolerances = enumerate_tolerances(lattice)
        rng = random.Random(20240601)
        all_pairs = [(x, y) for x in range(n) for y in range(n)]
        for _ in range(100):
            pairs = rng.sample(all_pairs, rng.randint(0, min(3, len(all_pairs))))
            generated = tolerance_generated_by(lattice, pairs)
            assert is_tolerance(lattice, generated)
            assert generated == generated_tolerance_oracle(tolerances, n, pairs)
