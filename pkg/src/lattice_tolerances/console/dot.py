"""Graphviz DOT text for order diagrams and tolerance blocks."""

import graphviz

from lattice_tolerances.blocks import BlockLattice
from lattice_tolerances.construction import PairedLattice
from lattice_tolerances.lattice import Lattice

GHOST_LEGEND = "dashed nodes repeat elements shared by blocks"


def _digraph(name: str) -> graphviz.Digraph:
    return graphviz.Digraph(graphviz.escape(name), graph_attr={"rankdir": "BT"})


def _cover_edges(graph: graphviz.Digraph, lattice: Lattice) -> None:
    for x, y in lattice.covers():
        graph.edge(f"n{x}", f"n{y}")


def hasse_dot(lattice: Lattice, name: str = "L") -> str:
    """Hasse diagram with cover edges pointing upward."""
    graph = _digraph(name)
    for x, label in enumerate(lattice.labels):
        graph.node(f"n{x}", graphviz.escape(label))
    _cover_edges(graph, lattice)
    return graph.source


def blocks_dot(blocks: BlockLattice, name: str = "blocks") -> str:
    """Hasse diagram of the base lattice with one cluster per block.

    An element lying in several blocks is drawn as a real node inside the
    first cluster and as a dashed ghost node inside each other one.
    """
    lattice = blocks.base
    graph = _digraph(name)
    placed: set[int] = set()
    ghosts = False
    for i, block in enumerate(blocks.blocks):
        with graph.subgraph(name=f"cluster_{i}") as cluster:
            cluster.attr(label=graphviz.escape(block.label(lattice)))
            for x in block:
                label = graphviz.escape(lattice.labels[x])
                if x in placed:
                    ghosts = True
                    cluster.node(f"g{i}_{x}", label, style="dashed")
                else:
                    placed.add(x)
                    cluster.node(f"n{x}", label)
    _cover_edges(graph, lattice)
    if ghosts:
        graph.node("legend", GHOST_LEGEND, shape="note")
    return graph.source


def block_lattice_dot(blocks: BlockLattice, name: str = "L/rho") -> str:
    return hasse_dot(blocks.lattice, name)


def paired_lattice_dot(paired: PairedLattice, name: str = "K") -> str:
    """Hasse diagram of K with elements labelled `A:x`."""
    return hasse_dot(paired.lattice, name)
