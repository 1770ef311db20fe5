"""Hypothesis suites for the theory-level invariants."""

from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import given, settings

from rbr import (
    belief_hierarchy_bounded,
    finest_partition,
    full_solution,
    graphs_equivalent,
    initial_partition,
    is_canonical,
    is_stable,
    iterate,
    make_binary_game,
    make_guess_average_game,
    make_sequence_game,
    minimise,
    rational_solution,
    rationalise,
    refine_once,
    validate_graph,
)
from rbr.solve import safety_bound
from .conftest import ABC


@st.composite
def graphs(draw, max_nodes=6, num_agents=3):
    """Small valid graphs over a fixed universe, reachability enforced by
    trimming."""
    agents = ABC[:num_agents]
    n = draw(st.integers(1, max_nodes))
    labels = [draw(st.integers(0, num_agents - 1)) for _ in range(n)]
    edges = []
    for src in range(n):
        for a in range(num_agents):
            if a == labels[src]:
                continue
            targets = [m for m in range(n) if labels[m] == a]
            if targets:
                pick = draw(st.sampled_from(targets + [None]))
                if pick is not None:
                    edges.append((src, pick))
    designation = {}
    for a in range(num_agents):
        candidates = [m for m in range(n) if labels[m] == a]
        if candidates and draw(st.booleans()):
            designation[a] = draw(st.sampled_from(candidates))
    if not designation:
        designation = {labels[0]: 0}

    reach = set(designation.values())
    frontier = list(reach)
    while frontier:
        src = frontier.pop()
        for s, t in edges:
            if s == src and t not in reach:
                reach.add(t)
                frontier.append(t)
    keep = sorted(reach)
    remap = {old: new for new, old in enumerate(keep)}
    return validate_graph(
        agents,
        len(keep),
        [labels[m] for m in keep],
        sorted({(remap[s], remap[t]) for s, t in edges if s in reach and t in reach}),
        {a: remap[m] for a, m in designation.items()},
    )


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_monotone_chain_from_full(g):
    game = make_guess_average_game(3, 5, agents=ABC)
    prev = full_solution(g, game)
    for _ in range(safety_bound(g, game)):
        cur = rationalise(g, game, prev)
        assert all(c <= p for c, p in zip(cur, prev))
        prev = cur
    assert is_stable(g, game, prev)


@given(graphs(), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_rationalisation_monotone_in_solution(g, i):
    game = make_guess_average_game(3, 5, agents=ABC)
    big = iterate(g, game, full_solution(g, game), i)
    small = iterate(g, game, big, 1)
    ra, rb = rationalise(g, game, big), rationalise(g, game, small)
    assert all(y <= x for x, y in zip(ra, rb))


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_stability_absorbs(g):
    game = make_binary_game(ABC)
    rep = rational_solution(g, game)
    for i in (1, 2, 3):
        assert iterate(g, game, rep.solution, i) == rep.solution


@given(graphs(), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_sequence_game_round_identity(g, k):
    """Round i of the depth-k sequence game eliminates exactly the
    depth-i belief sequences."""
    game = make_sequence_game(ABC, k)
    current = full_solution(g, game)
    for i in range(1, k + 2):
        current = rationalise(g, game, current)
        bound = min(i, k)
        for n in g.nodes():
            expect = frozenset(game.strategies[g.labels[n]]) - belief_hierarchy_bounded(
                g, n, bound
            )
            assert current[n] == expect


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_refinement_reaches_fixpoint_within_node_count(g):
    p = initial_partition(g)
    for _ in range(g.num_nodes):
        p = refine_once(g, p)
    assert refine_once(g, p) == p
    assert p == finest_partition(g)


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_finest_blocks_are_hierarchy_classes(g):
    p = finest_partition(g)
    depth = g.num_nodes
    for n in g.nodes():
        for m in g.nodes():
            same = belief_hierarchy_bounded(g, n, depth) == belief_hierarchy_bounded(
                g, m, depth
            )
            assert p.same_block(n, m) == same


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_minimise_sound_and_canonical(g):
    out = minimise(g).output
    assert is_canonical(out)
    assert graphs_equivalent(g, out)
