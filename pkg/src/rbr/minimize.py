"""Compression of an RBR graph to its minimal equivalent canonical form.

The quotient of a graph by its finest partition merges every set of
hierarchy-equal nodes into one; the result is the unique (up to
isomorphism) smallest graph equivalent to the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotFinest
from .graph import NO_NODE, RbrGraph, validate_graph
from .partition import Partition, _finest_with_rounds, refine_once


@dataclass(frozen=True)
class MinimisationReport:
    output: RbrGraph
    block_map: tuple[int, ...]  # input node -> output node; a local isomorphism
    refinement_rounds: int


def quotient(g: RbrGraph, p: Partition) -> RbrGraph:
    """Collapse each block of the finest partition ``p`` into one node.

    Blocks become nodes in smallest-member order, every input edge maps
    to a block edge, labels and designations carry over.  A partition
    that one more refinement pass would still split is rejected.
    """
    if refine_once(g, p) != p:
        raise NotFinest("partition is not refinement-stable")

    blocks = p.blocks()
    reps = [min(members) for members in blocks]
    order = sorted(range(p.block_count), key=reps.__getitem__)
    new_id = [0] * p.block_count
    for i, k in enumerate(order):
        new_id[k] = i

    labels = [0] * p.block_count
    names = [""] * p.block_count
    for k in order:
        labels[new_id[k]] = g.labels[reps[k]]
        names[new_id[k]] = g.node_names[reps[k]]
    edges = {
        (new_id[p.block_of[n]], new_id[p.block_of[m]]) for n, m in g.edges()
    }
    designation = {
        a: new_id[p.block_of[n]]
        for a, n in enumerate(g.designated)
        if n != NO_NODE
    }
    return validate_graph(
        g.agents,
        p.block_count,
        labels,
        sorted(edges),
        designation,
        node_names=names,
    )


def minimise(g: RbrGraph) -> MinimisationReport:
    """Minimal equivalent canonical form of ``g`` with the witnessing
    block map."""
    p, rounds = _finest_with_rounds(g)
    out = quotient(g, p)
    reps = [min(members) for members in p.blocks()]
    order = sorted(range(p.block_count), key=reps.__getitem__)
    new_id = [0] * p.block_count
    for i, k in enumerate(order):
        new_id[k] = i
    block_map = tuple(new_id[p.block_of[n]] for n in g.nodes())
    return MinimisationReport(output=out, block_map=block_map, refinement_rounds=rounds)
