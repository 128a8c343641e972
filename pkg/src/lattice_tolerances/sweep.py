"""Exhaustive verification sweeps over a corpus of lattices."""

import logging
import time
from collections.abc import Callable, Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Literal

from lattice_tolerances.construction import verify_theorem1
from lattice_tolerances.errors import TooLargeError
from lattice_tolerances.lattice import Lattice
from lattice_tolerances.quotient import verify_theorem2_converse, verify_theorem2_forward
from lattice_tolerances.relations import (
    BinaryRelation,
    EnumerationConfig,
    enumerate_congruences,
    enumerate_tolerances,
    resolve_enumeration_config,
)
from lattice_tolerances.report import VerificationReport

type Theorem = Literal["1", "2", "2conv"]
type Task = Callable[[], VerificationReport]

THEOREMS: tuple[Theorem, ...] = ("1", "2", "2conv")


@dataclass(frozen=True)
class SweepConfig:
    """Configuration of a verification sweep.

    Attributes:
        enumeration: Settings of the tolerance and congruence enumerators.
        max_workers: Threads running verification tasks. Reports are
            always returned in task order.
        skip_too_large: Skip lattices over the enumeration cap with a
            warning instead of raising `TooLargeError`.
    """

    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    max_workers: int = 1
    skip_too_large: bool = True

    def __post_init__(self) -> None:
        if self.max_workers < 1:
            raise ValueError("max_workers must be positive")


def resolve_sweep_config(config: Mapping[str, Any] | SweepConfig | None) -> SweepConfig:
    if config is None:
        return SweepConfig()
    if isinstance(config, SweepConfig):
        return config
    values = dict(config)
    if "enumeration" in values:
        values["enumeration"] = resolve_enumeration_config(values["enumeration"])
    return SweepConfig(**values)


def relation_name(lattice: Lattice, relation: BinaryRelation) -> str:
    """Short name of a relation: its non-diagonal pairs, or `diagonal`."""
    pairs = relation.nondiagonal_pairs()
    if not pairs:
        return "diagonal"
    return " ".join(f"{lattice.labels[x]}~{lattice.labels[y]}" for x, y in pairs)


def _run(tasks: list[Task], config: SweepConfig) -> list[VerificationReport]:
    if config.max_workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
            return list(executor.map(lambda task: task(), tasks))
    return [task() for task in tasks]


def _theorem1_tasks(name: str, lattice: Lattice, config: SweepConfig) -> list[Task]:
    return [
        partial(
            verify_theorem1,
            lattice,
            rho,
            f"theorem1 {name} [{relation_name(lattice, rho)}]",
        )
        for rho in enumerate_tolerances(lattice, config.enumeration)
    ]


def _forward_tasks(name: str, lattice: Lattice, config: SweepConfig) -> list[Task]:
    congruences = enumerate_congruences(lattice, config.enumeration)
    return [
        partial(
            verify_theorem2_forward,
            lattice,
            alpha,
            gamma,
            f"theorem2 {name} [alpha: {relation_name(lattice, alpha)}; "
            f"gamma: {relation_name(lattice, gamma)}]",
        )
        for alpha in congruences
        for gamma in congruences
    ]


def _converse_tasks(name: str, lattice: Lattice, config: SweepConfig) -> list[Task]:
    return [
        partial(
            verify_theorem2_converse,
            lattice,
            tau,
            f"theorem2conv {name} [{relation_name(lattice, tau)}]",
        )
        for tau in enumerate_tolerances(lattice, config.enumeration)
    ]


_TASK_BUILDERS: dict[Theorem, Callable[[str, Lattice, SweepConfig], list[Task]]] = {
    "1": _theorem1_tasks,
    "2": _forward_tasks,
    "2conv": _converse_tasks,
}


def sweep(
    theorem: Theorem,
    lattices: Mapping[str, Lattice],
    config: Mapping[str, Any] | SweepConfig | None = None,
) -> list[VerificationReport]:
    """Verify a theorem on every enumerated case of every lattice.

    Args:
        theorem: `"1"` (tolerances as images of congruences), `"2"`
            (alpha/gamma is a tolerance, for every ordered pair of
            congruences) or `"2conv"` (every tolerance is some alpha/gamma).
        lattices: Named lattices, swept in mapping order.
        config: Sweep configuration.

    Returns:
        Reports in deterministic order: by lattice, then by the canonical
        order of the enumerated relations.

    Raises:
        TooLargeError: If a lattice is over the cap and
            `config.skip_too_large` is False.
    """
    logger = logging.getLogger(__name__)
    config = resolve_sweep_config(config)
    build = _TASK_BUILDERS[theorem]
    reports: list[VerificationReport] = []
    for name, lattice in lattices.items():
        started = time.perf_counter()
        try:
            tasks = build(name, lattice, config)
        except TooLargeError as e:
            if not config.skip_too_large:
                raise
            logger.warning(f"Skipping '{name}': {e}")
            continue
        results = _run(tasks, config)
        failed = sum(not report.passed for report in results)
        logger.info(
            f"Theorem {theorem} sweep over '{name}': {len(results)} cases, "
            f"{failed} failed in {time.perf_counter() - started:.2f}s"
        )
        reports.extend(results)
    return reports


def sweep_theorem1(
    lattices: Mapping[str, Lattice],
    config: Mapping[str, Any] | SweepConfig | None = None,
) -> list[VerificationReport]:
    return sweep("1", lattices, config)


def sweep_theorem2_forward(
    lattices: Mapping[str, Lattice],
    config: Mapping[str, Any] | SweepConfig | None = None,
) -> list[VerificationReport]:
    return sweep("2", lattices, config)


def sweep_theorem2_converse(
    lattices: Mapping[str, Lattice],
    config: Mapping[str, Any] | SweepConfig | None = None,
) -> list[VerificationReport]:
    return sweep("2conv", lattices, config)


def sweep_all(
    lattices: Mapping[str, Lattice],
    config: Mapping[str, Any] | SweepConfig | None = None,
) -> list[VerificationReport]:
    """All three sweeps, theorem 1 first."""
    return [report for theorem in THEOREMS for report in sweep(theorem, lattices, config)]
