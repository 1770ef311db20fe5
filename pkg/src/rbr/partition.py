"""Partition refinement and doxastic equivalence.

Nodes start out grouped by label and are repeatedly split by the blocks
their successors fall into; the finest partition groups nodes exactly
when their full belief hierarchies coincide.  Cross-graph questions are
answered on a disjoint union of the two graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AgentUniverseMismatch,
    LabelMixingPartition,
    NotCanonical,
    PartialMapping,
)
from .graph import NO_NODE, RbrGraph, validate_graph


@dataclass(frozen=True)
class Partition:
    """Dense block assignment over a graph's nodes.

    Blocks are numbered 0..block_count-1 in order of their smallest
    member, so structurally equal partitions compare equal.
    """

    block_of: tuple[int, ...]
    block_count: int

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for n, k in enumerate(self.block_of):
            out[k].append(n)
        return out

    def same_block(self, n: int, m: int) -> bool:
        return self.block_of[n] == self.block_of[m]


def _normalise(raw: Sequence) -> Partition:
    """Renumber arbitrary block keys densely by first occurrence."""
    seen: dict = {}
    block_of = []
    for key in raw:
        if key not in seen:
            seen[key] = len(seen)
        block_of.append(seen[key])
    return Partition(block_of=tuple(block_of), block_count=len(seen))


def initial_partition(g: RbrGraph) -> Partition:
    """Group nodes by label (depth-1 hierarchy equivalence)."""
    return _normalise(g.labels)


def _check_label_respecting(g: RbrGraph, p: Partition) -> None:
    rep: dict[int, int] = {}
    for n, k in enumerate(p.block_of):
        if rep.setdefault(k, g.labels[n]) != g.labels[n]:
            raise LabelMixingPartition(f"block {k} mixes labels")


def type_vector(g: RbrGraph, p: Partition, n: int) -> tuple[int, ...]:
    """Per-agent successor-block signature of node ``n`` under ``p``.

    Entry a is the block of the a-successor; the node's own label slot
    carries its negated block, and missing successors the out-of-range
    placeholder ``block_count``.
    """
    row = g.succ[n]
    own = g.labels[n]
    return tuple(
        -p.block_of[n]
        if a == own
        else (p.block_of[row[a]] if row[a] != NO_NODE else p.block_count)
        for a in range(g.num_agents)
    )


def refine_once(g: RbrGraph, p: Partition) -> Partition:
    """Split blocks of ``p`` by type vector.

    Two nodes stay together iff they share a block in ``p`` and have
    equal type vectors.  Nodes are ordered by a stable sorting pass per
    agent index and a final pass on the old block, then renumbered by a
    single scan.
    """
    _check_label_respecting(g, p)
    tv = [type_vector(g, p, n) for n in g.nodes()]
    order = list(g.nodes())
    for a in range(g.num_agents - 1, -1, -1):
        order.sort(key=lambda n: tv[n][a])
    order.sort(key=lambda n: p.block_of[n])

    raw = [0] * g.num_nodes
    key = 0
    for pos, n in enumerate(order):
        prev = order[pos - 1]
        if pos > 0 and (p.block_of[n] != p.block_of[prev] or tv[n] != tv[prev]):
            key += 1
        raw[n] = key
    return _normalise(raw)


def finest_partition(g: RbrGraph) -> Partition:
    return _finest_with_rounds(g)[0]


def _finest_with_rounds(g: RbrGraph) -> tuple[Partition, int]:
    """Refine from the label partition to the fixpoint; the round count
    excludes the confirming no-op pass."""
    p = initial_partition(g)
    rounds = 0
    while True:
        nxt = refine_once(g, p)
        if nxt == p:
            return p, rounds
        p = nxt
        rounds += 1


def disjoint_union(ga: RbrGraph, gb: RbrGraph) -> RbrGraph:
    """Union of two graphs over a shared agent universe.

    Designations are dropped and reachability is not enforced: the union
    exists only to compare belief hierarchies, which ignore both.
    """
    if ga.agents != gb.agents:
        raise AgentUniverseMismatch((ga.agents, gb.agents))
    off = ga.num_nodes
    edges = list(ga.edges()) + [(n + off, m + off) for n, m in gb.edges()]
    return validate_graph(
        ga.agents,
        ga.num_nodes + gb.num_nodes,
        ga.labels + gb.labels,
        edges,
        {},
        node_names=ga.node_names + gb.node_names,
        require_reachable=False,
    )


def nodes_doxastically_equivalent(
    ga: RbrGraph, na: int, gb: RbrGraph, nb: int
) -> bool:
    """True iff the two nodes have identical belief hierarchies at every
    depth (and hence identical rational-solution entries in every game)."""
    ga.check_node(na)
    gb.check_node(nb)
    p = finest_partition(disjoint_union(ga, gb))
    return p.same_block(na, ga.num_nodes + nb)


def graphs_equivalent(ga: RbrGraph, gb: RbrGraph) -> bool:
    """Same designation domain and per-agent equivalent designated nodes."""
    if ga.agents != gb.agents:
        raise AgentUniverseMismatch((ga.agents, gb.agents))
    if ga.designation_domain() != gb.designation_domain():
        return False
    p = finest_partition(disjoint_union(ga, gb))
    off = ga.num_nodes
    return all(
        p.same_block(ga.designated[a], off + gb.designated[a])
        for a in ga.designation_domain()
    )


def is_canonical(g: RbrGraph) -> bool:
    """All nodes pairwise distinguishable by belief hierarchy."""
    return finest_partition(g).block_count == g.num_nodes


def check_local_isomorphism(
    ga: RbrGraph, gb: RbrGraph, alpha: Sequence[int]
) -> bool:
    """Verify that ``alpha`` maps ``ga`` onto ``gb`` preserving edge
    images, labels, and designations."""
    if ga.agents != gb.agents:
        raise AgentUniverseMismatch((ga.agents, gb.agents))
    if len(alpha) != ga.num_nodes or any(
        not 0 <= m < gb.num_nodes for m in alpha
    ):
        raise PartialMapping("mapping must cover exactly the source node set")
    if set(alpha) != set(gb.nodes()):
        return False
    for n in ga.nodes():
        if ga.labels[n] != gb.labels[alpha[n]]:
            return False
        image = {alpha[m] for a, m in enumerate(ga.succ[n]) if m != NO_NODE}
        target = {m for m in gb.succ[alpha[n]] if m != NO_NODE}
        if image != target:
            return False
    if ga.designation_domain() != gb.designation_domain():
        return False
    return all(
        alpha[ga.designated[a]] == gb.designated[a]
        for a in ga.designation_domain()
    )


def find_isomorphism(ga: RbrGraph, gb: RbrGraph) -> tuple[int, ...] | None:
    """Bijection pairing hierarchy-equal nodes of two canonical graphs,
    or None when the graphs are not equivalent."""
    for g in (ga, gb):
        if not is_canonical(g):
            raise NotCanonical("both graphs must be canonical")
    if not graphs_equivalent(ga, gb):
        return None
    if ga.num_nodes != gb.num_nodes:
        return None
    p = finest_partition(disjoint_union(ga, gb))
    partner: dict[int, int] = {}
    for m in gb.nodes():
        partner[p.block_of[ga.num_nodes + m]] = m
    alpha = []
    for n in ga.nodes():
        m = partner.get(p.block_of[n])
        if m is None:
            return None
        alpha.append(m)
    if len(set(alpha)) != gb.num_nodes:
        return None
    return tuple(alpha)
