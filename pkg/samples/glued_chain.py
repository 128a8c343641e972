"""Worked example: the glued tolerance of the 3-element chain.

The chain `0 < a < 1` has the tolerance relating `0~a` and `a~1` but not
`0~1`. It is not a congruence, yet it is the image of a congruence:
this script builds the 4-element lattice K, its congruence theta and the
projection phi, and prints what each of them looks like.
"""

import logging

from lattice_tolerances import build_paired_lattice, chain, verify_theorem1
from lattice_tolerances.console import paired_lattice_dot
from lattice_tolerances.testing import glued_tolerance


def setup_logging() -> None:
    """Configure logging for the demo."""
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler()],
    )


def main() -> None:
    setup_logging()
    logger = logging.getLogger("glued_chain")

    three = chain(3)
    rho = glued_tolerance(three)
    paired = build_paired_lattice(three, rho)

    blocks = [block.label(three) for block in paired.block_lattice.blocks]
    logger.info(f"Blocks of rho: {blocks}")
    logger.info(f"K has {len(paired.lattice)} elements: {', '.join(paired.lattice.labels)}")
    for members in paired.theta_classes():
        labels = [paired.lattice.label(k) for k in members]
        images = {three.label(paired.phi(k)) for k in members}
        logger.info(f"theta class {labels} projects onto {sorted(images)}")

    report = verify_theorem1(three, rho, "chain3 glued")
    print(report.format())
    print(paired_lattice_dot(paired, "K"), end="")


if __name__ == "__main__":
    main()
