"""Quotient lattices, kernels and the relation alpha/gamma.

For congruences `alpha` and `gamma` of `L`, `alpha/gamma` relates two
gamma-classes iff some of their representatives are alpha-related. It
is a tolerance of `L/gamma`, and every tolerance of a lattice arises
this way up to isomorphism.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from lattice_tolerances.construction import build_paired_lattice
from lattice_tolerances.errors import (
    InvariantViolationError,
    IsomorphismNotFoundError,
    NotACongruenceError,
    NotAToleranceError,
)
from lattice_tolerances.lattice import ElementId, Lattice, find_isomorphism
from lattice_tolerances.lattice.isomorphism import is_isomorphism
from lattice_tolerances.relations import (
    BinaryRelation,
    Homomorphism,
    image_relation,
    is_congruence,
    is_tolerance,
)
from lattice_tolerances.report import Check, VerificationReport, difference_witnesses

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientLattice:
    """L/gamma for a congruence gamma.

    Attributes:
        base: The lattice L.
        gamma: The congruence.
        classes: gamma-classes sorted by least member; a class's id is its
            position.
        lattice: The lattice on class ids.
        proj: The canonical homomorphism of L onto `lattice`.
    """

    base: Lattice
    gamma: BinaryRelation
    classes: tuple[tuple[ElementId, ...], ...]
    lattice: Lattice
    proj: Homomorphism

    def class_of(self, x: ElementId) -> int:
        return self.proj(x)


def quotient(lattice: Lattice, gamma: BinaryRelation) -> QuotientLattice:
    """The quotient lattice L/gamma.

    Class tables are computed from the least member of each class and
    then checked against the operation on every pair of representatives.

    Raises:
        NotACongruenceError: If `gamma` is not a congruence, including
            tolerances that are not transitive.
    """
    if not is_congruence(lattice, gamma):
        raise NotACongruenceError("Quotients are taken by congruences")
    classes = gamma.classes()
    class_of = np.empty(len(lattice), dtype=np.intp)
    for i, members in enumerate(classes):
        class_of[list(members)] = i
    representatives = np.asarray([members[0] for members in classes], dtype=np.intp)
    rep_pairs = (representatives[:, None], representatives[None, :])
    join = class_of[lattice.join_table[rep_pairs]]
    meet = class_of[lattice.meet_table[rep_pairs]]
    for table, quotient_table in (
        (lattice.join_table, join),
        (lattice.meet_table, meet),
    ):
        if not np.array_equal(
            class_of[table], quotient_table[class_of[:, None], class_of[None, :]]
        ):
            logger.error("Class operation depends on the representatives")
            raise InvariantViolationError("Class operation is not well defined")
    labels = ["{" + ",".join(lattice.labels[x] for x in members) + "}" for members in classes]
    quotient_lattice = Lattice.from_tables(labels, join, meet)
    return QuotientLattice(
        base=lattice,
        gamma=gamma,
        classes=tuple(classes),
        lattice=quotient_lattice,
        proj=Homomorphism(lattice, quotient_lattice, class_of.tolist()),
    )


def kernel(phi: Homomorphism) -> BinaryRelation:
    """The congruence `{(x, y) | phi(x) = phi(y)}` of `phi.dom`.

    Raises:
        InvariantViolationError: If the kernel is not a congruence.
    """
    image = np.asarray(phi.map, dtype=np.intp)
    result = BinaryRelation(image[:, None] == image[None, :])
    if not is_congruence(phi.dom, result):
        logger.error(f"Kernel of {phi} is not a congruence")
        raise InvariantViolationError("Kernel is not a congruence")
    return result


def _related_classes(q: QuotientLattice, alpha: BinaryRelation) -> BinaryRelation:
    count = len(q.classes)
    bits = np.zeros((count, count), dtype=np.bool_)
    for i, first in enumerate(q.classes):
        for j, second in enumerate(q.classes):
            bits[i, j] = alpha.bits[np.ix_(first, second)].any()
    return BinaryRelation(bits)


def _require_congruences(
    lattice: Lattice, alpha: BinaryRelation, gamma: BinaryRelation
) -> None:
    for name, relation in (("alpha", alpha), ("gamma", gamma)):
        if not is_congruence(lattice, relation):
            raise NotACongruenceError(f"{name} is not a congruence")


def alpha_over_gamma(
    lattice: Lattice, alpha: BinaryRelation, gamma: BinaryRelation
) -> BinaryRelation:
    """The relation alpha/gamma on the classes of L/gamma.

    Classes `X` and `Y` are related iff some `u` in `X` and `v` in `Y`
    satisfy `(u, v)` in alpha. The result is cross-checked against the
    image of alpha under the canonical projection.

    Raises:
        NotACongruenceError: If alpha or gamma is not a congruence.
        InvariantViolationError: If the two computations disagree.
    """
    _require_congruences(lattice, alpha, gamma)
    q = quotient(lattice, gamma)
    direct = _related_classes(q, alpha)
    if direct != image_relation(q.proj, alpha):
        logger.error("alpha/gamma disagrees with the image of alpha")
        raise InvariantViolationError("alpha/gamma disagrees with the image of alpha")
    return direct


def verify_theorem2_forward(
    lattice: Lattice, alpha: BinaryRelation, gamma: BinaryRelation, subject: str = ""
) -> VerificationReport:
    """Check that alpha/gamma is a tolerance of L/gamma.

    Also checks that alpha/gamma equals the image of alpha under the
    projection, and that it is a congruence whenever alpha includes gamma.

    Raises:
        NotACongruenceError: If alpha or gamma is not a congruence.
    """
    _require_congruences(lattice, alpha, gamma)
    subject = subject or f"theorem2 on {len(lattice)}-element lattice"
    q = quotient(lattice, gamma)
    direct = _related_classes(q, alpha)
    image = image_relation(q.proj, alpha)
    labels = q.lattice.labels
    checks = [
        Check("alpha/gamma is a tolerance of L/gamma", is_tolerance(q.lattice, direct)),
        Check(
            "alpha/gamma = proj(alpha)",
            direct == image,
            witnesses=difference_witnesses(labels, image, direct),
        ),
    ]
    if gamma.issubset(alpha):
        checks.append(
            Check(
                "alpha/gamma is a congruence when gamma is below alpha",
                is_congruence(q.lattice, direct),
            )
        )
    return VerificationReport(
        subject, tuple(checks), summary=f"|L/gamma| = {len(q.lattice)}"
    )


def verify_theorem2_converse(
    lattice: Lattice, tau: BinaryRelation, subject: str = ""
) -> VerificationReport:
    """Realize the tolerance tau of K as alpha/gamma up to isomorphism.

    `L` is the paired lattice built from `(K, tau)`, alpha its congruence
    theta and gamma the kernel of its projection phi. The isomorphism
    `psi: L/gamma -> K` maps the class of `k` to `phi(k)`; if that map
    is not an isomorphism, `find_isomorphism` is used instead. The
    report checks that transporting alpha/gamma along psi gives tau.

    Raises:
        NotAToleranceError: If `tau` is not a tolerance of `lattice`.
        IsomorphismNotFoundError: If L/gamma is not isomorphic to K.
    """
    if not is_tolerance(lattice, tau):
        raise NotAToleranceError("The converse starts from a tolerance")
    subject = subject or f"theorem2 converse on {len(lattice)}-element lattice"
    paired = build_paired_lattice(lattice, tau)
    big = paired.lattice
    alpha = paired.theta
    gamma = kernel(paired.phi)
    q = quotient(big, gamma)

    psi = tuple(paired.phi(members[0]) for members in q.classes)
    if not is_isomorphism(q.lattice, lattice, psi):
        logger.warning("Induced map L/gamma -> K is not an isomorphism; searching")
        found = find_isomorphism(q.lattice, lattice)
        if found is None:
            logger.error("L/gamma is not isomorphic to K")
            raise IsomorphismNotFoundError("L/gamma is not isomorphic to K")
        psi = found.forward

    over = alpha_over_gamma(big, alpha, gamma)
    image = np.asarray(psi, dtype=np.intp)
    transported = np.zeros_like(tau.bits)
    xs, ys = np.nonzero(over.bits)
    transported[image[xs], image[ys]] = True
    transported_relation = BinaryRelation(transported)

    checks = (
        Check("alpha is a congruence of L", is_congruence(big, alpha)),
        Check("gamma is a congruence of L", is_congruence(big, gamma)),
        Check("psi is an isomorphism L/gamma -> K", is_isomorphism(q.lattice, lattice, psi)),
        Check(
            "psi(alpha/gamma) = tau",
            transported_relation == tau,
            witnesses=difference_witnesses(lattice.labels, tau, transported_relation),
        ),
    )
    return VerificationReport(
        subject, checks, summary=f"|L| = {len(big)}, |L/gamma| = {len(q.lattice)}"
    )
