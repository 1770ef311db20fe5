"""Rationality-and-beliefs-in-rationality (RBR) graphs.

An RBR graph is a finite labelled digraph: each node is labelled with an
agent, edges mean "believes rational", and a partial designation picks the
node standing for each real (rational) agent.  Undesignated nodes are
doxastic agents that exist only inside someone's belief.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DanglingEdge,
    DesignationMismatch,
    DuplicateSuccessor,
    EmptyAgentUniverse,
    SelfBelief,
    SizeCap,
    UnknownNode,
    UnreachableNode,
    ZeroLength,
)

NO_NODE = -1

DEFAULT_SEQUENCE_CAP = 10**6


@dataclass(frozen=True)
class RbrGraph:
    """Validated, immutable RBR graph.

    Agents and nodes are dense integer ids.  Edges are stored per node as a
    successor array indexed by agent label: ``succ[n][a]`` is the unique
    a-labelled successor of node ``n``, or ``NO_NODE``.  ``designated[a]``
    is the real node of agent ``a``, or ``NO_NODE`` for irrational agents.

    Construct through :func:`validate_graph`; the raw constructor performs
    no checking.
    """

    agents: tuple[str, ...]
    labels: tuple[int, ...]
    succ: tuple[tuple[int, ...], ...]
    designated: tuple[int, ...]
    node_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.node_names:
            object.__setattr__(
                self, "node_names", tuple(f"n{i}" for i in range(len(self.labels)))
            )

    @property
    def num_agents(self) -> int:
        return len(self.agents)

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    def nodes(self) -> range:
        return range(len(self.labels))

    def edges(self) -> Iterator[tuple[int, int]]:
        for n, row in enumerate(self.succ):
            for m in row:
                if m != NO_NODE:
                    yield n, m

    def designation_domain(self) -> frozenset[int]:
        return frozenset(a for a, n in enumerate(self.designated) if n != NO_NODE)

    def is_designated(self, n: int) -> bool:
        return self.designated[self.labels[n]] == n

    def check_node(self, n: int) -> None:
        if not 0 <= n < len(self.labels):
            raise UnknownNode(n)


def validate_graph(
    agents: Sequence[str],
    num_nodes: int,
    labels: Sequence[int],
    edges: Iterable[tuple[int, int]],
    designation: Mapping[int, int],
    node_names: Sequence[str] | None = None,
    *,
    require_reachable: bool = True,
) -> RbrGraph:
    """Check raw graph components and build the successor representation.

    ``edges`` are ordered node pairs; ``designation`` maps agent id to node
    id.  Raises a :class:`~rbr.errors.GraphValidationError` subclass on the
    first violation found.
    """
    if not agents:
        raise EmptyAgentUniverse("agent universe is empty")
    if len(set(agents)) != len(agents) or any(not a for a in agents):
        raise EmptyAgentUniverse("agent display names must be unique and non-empty")
    num_agents = len(agents)
    if len(labels) != num_nodes:
        raise DanglingEdge("label array does not cover the node set")
    for n, a in enumerate(labels):
        if not 0 <= a < num_agents:
            raise DanglingEdge((n, a))

    succ = [[NO_NODE] * num_agents for _ in range(num_nodes)]
    for n, m in edges:
        if not (0 <= n < num_nodes and 0 <= m < num_nodes):
            raise DanglingEdge((n, m))
        if labels[n] == labels[m]:
            raise SelfBelief(n)
        a = labels[m]
        if succ[n][a] not in (NO_NODE, m):
            raise DuplicateSuccessor(n, a)
        succ[n][a] = m

    designated = [NO_NODE] * num_agents
    for a, n in designation.items():
        if not 0 <= a < num_agents:
            raise DanglingEdge((a, n))
        if not 0 <= n < num_nodes:
            raise DanglingEdge((a, n))
        if labels[n] != a:
            raise DesignationMismatch(a, n)
        designated[a] = n

    if require_reachable:
        seen = [False] * num_nodes
        stack = [n for n in designated if n != NO_NODE]
        for n in stack:
            seen[n] = True
        while stack:
            n = stack.pop()
            for m in succ[n]:
                if m != NO_NODE and not seen[m]:
                    seen[m] = True
                    stack.append(m)
        for n, ok in enumerate(seen):
            if not ok:
                raise UnreachableNode(n)

    names = tuple(node_names) if node_names else ()
    return RbrGraph(
        agents=tuple(agents),
        labels=tuple(labels),
        succ=tuple(tuple(row) for row in succ),
        designated=tuple(designated),
        node_names=names,
    )


def adjacency(g: RbrGraph, n: int) -> frozenset[int]:
    """Successor nodes of ``n`` (one per believed-rational agent)."""
    g.check_node(n)
    return frozenset(m for m in g.succ[n] if m != NO_NODE)


def believed_rational(g: RbrGraph, n: int) -> frozenset[int]:
    """Agents that the agent at node ``n`` believes to be rational."""
    g.check_node(n)
    return frozenset(a for a, m in enumerate(g.succ[n]) if m != NO_NODE)


def path_sequences(
    g: RbrGraph, n: int, i: int, cap: int = DEFAULT_SEQUENCE_CAP
) -> frozenset[tuple[int, ...]]:
    """Label sequences of all length-``i`` paths starting at node ``n``.

    Computed level by level with per-node memoisation and set
    deduplication.  ``cap`` bounds the total number of sequences held at
    any level; exceeding it raises :class:`SizeCap`.
    """
    g.check_node(n)
    if i < 1:
        raise ZeroLength(f"path length must be positive, got {i}")
    level: dict[int, frozenset[tuple[int, ...]]] = {
        m: frozenset({(g.labels[m],)}) for m in g.nodes()
    }
    for _ in range(i - 1):
        nxt: dict[int, frozenset[tuple[int, ...]]] = {}
        total = 0
        for m in g.nodes():
            seqs = set()
            for m2 in g.succ[m]:
                if m2 != NO_NODE:
                    seqs.update((g.labels[m],) + s for s in level[m2])
            nxt[m] = frozenset(seqs)
            total += len(seqs)
            if total > cap:
                raise SizeCap(f"more than {cap} sequences at one level")
        level = nxt
    return level[n]


def belief_hierarchy_bounded(
    g: RbrGraph, n: int, j: int, cap: int = DEFAULT_SEQUENCE_CAP
) -> frozenset[tuple[int, ...]]:
    """All belief sequences of length at most ``j`` starting at node ``n``."""
    g.check_node(n)
    out: set[tuple[int, ...]] = set()
    for i in range(1, j + 1):
        out.update(path_sequences(g, n, i, cap=cap))
        if len(out) > cap:
            raise SizeCap(f"more than {cap} sequences in the bounded hierarchy")
    return frozenset(out)
