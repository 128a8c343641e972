"""Structured results of verification runs."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from lattice_tolerances.relations import BinaryRelation, Pair

type LabelPair = tuple[str, str]


@dataclass(frozen=True)
class Check:
    """Outcome of one named check.

    Attributes:
        name: What was checked.
        passed: Whether the check holds.
        witnesses: Counterexample pairs, written with user labels.
        detail: Optional free text, e.g. the error message of a failed step.
    """

    name: str
    passed: bool
    witnesses: tuple[LabelPair, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Checks run on one subject; passes iff every check passes."""

    subject: str
    checks: tuple[Check, ...] = field(default_factory=tuple)
    summary: str = ""

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> Check:
        """The check called `name`.

        Raises:
            KeyError: If there is no such check.
        """
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(f"No check named '{name}'")

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "summary": self.summary,
            "checks": [
                {
                    "name": check.name,
                    "passed": check.passed,
                    "witnesses": [list(pair) for pair in check.witnesses],
                    "detail": check.detail,
                }
                for check in self.checks
            ],
        }

    def format(self) -> str:
        """One status line, followed by one line per failed check."""
        status = "PASS" if self.passed else "FAIL"
        head = f"{status} {self.subject}"
        if self.summary:
            head += f": {self.summary}"
        lines = [head]
        for check in self.failed_checks:
            line = f"  - {check.name}"
            if check.detail:
                line += f": {check.detail}"
            if check.witnesses:
                line += " [" + ", ".join(f"({x},{y})" for x, y in check.witnesses) + "]"
            lines.append(line)
        return "\n".join(lines)


def label_pairs(labels: Sequence[str], pairs: Iterable[Pair]) -> tuple[LabelPair, ...]:
    return tuple((labels[x], labels[y]) for x, y in pairs)


def difference_witnesses(
    labels: Sequence[str], expected: BinaryRelation, actual: BinaryRelation
) -> tuple[LabelPair, ...]:
    """Pairs in exactly one of the two relations, in row-major order."""
    differing = np.argwhere(expected.bits != actual.bits)
    return label_pairs(labels, ((int(x), int(y)) for x, y in differing))
