"""Finite games with partial-order preferences, dominance, rational response.

A strategy is any hashable value; an outcome is a tuple with one strategy
per agent, indexed by agent id.  Preferences are exposed through a
comparison oracle; utility-defined games derive the oracle from exact
(rational-number) utilities.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Optional, Sequence

from .errors import ForeignStrategy, SceneOwnerMismatch, SizeCap, TooFewAgents

Strategy = Hashable
Outcome = tuple

# Comparison oracle verdicts: -1 first outcome strictly worse, 1 strictly
# better, 0 equivalent, None incomparable.
Compare = Callable[[int, Outcome, Outcome], Optional[int]]

DEFAULT_PROFILE_CAP = 10**6


@dataclass(frozen=True)
class Game:
    """Immutable finite game over the agent universe ``agents``.

    ``compare(a, s, s2)`` is agent ``a``'s preference oracle over full
    outcome profiles.  ``utility`` is present exactly when the game is
    utility-defined; it must agree with ``compare``.
    """

    agents: tuple[str, ...]
    strategies: tuple[tuple[Strategy, ...], ...]
    compare: Compare
    utility: Callable[[int, Outcome], Fraction] | None = None

    @property
    def num_agents(self) -> int:
        return len(self.agents)

    def strategy_space(self, a: int) -> tuple[Strategy, ...]:
        return self.strategies[a]


def utility_game(
    agents: Sequence[str],
    strategies: Sequence[Sequence[Strategy]],
    utility: Callable[[int, Outcome], Fraction],
) -> Game:
    """Build a game whose preference order is induced by ``utility``."""

    def compare(a: int, s: Outcome, s2: Outcome) -> int:
        ua, ub = utility(a, s), utility(a, s2)
        return (ua > ub) - (ua < ub)

    return Game(
        agents=tuple(agents),
        strategies=tuple(tuple(sp) for sp in strategies),
        compare=compare,
        utility=utility,
    )


@dataclass(frozen=True)
class ReasoningScene:
    """Per-opponent nonempty strategy subsets entertained by ``owner``.

    ``opponents[b]`` is the set believed possible for agent ``b``; the
    entry at the owner's own index is unused and empty.
    """

    owner: int
    opponents: tuple[frozenset, ...]

    def narrower_than(self, other: "ReasoningScene") -> bool:
        """Coordinatewise containment (self sub-scene of other)."""
        return self.owner == other.owner and all(
            mine <= theirs
            for b, (mine, theirs) in enumerate(zip(self.opponents, other.opponents))
            if b != self.owner
        )


def full_scene(game: Game, a: int) -> ReasoningScene:
    return make_scene(
        game, a, {b: game.strategies[b] for b in range(game.num_agents) if b != a}
    )


def make_scene(game: Game, owner: int, opponent_sets) -> ReasoningScene:
    """Validate and freeze a reasoning scene for ``owner``."""
    opponents = []
    for b in range(game.num_agents):
        if b == owner:
            opponents.append(frozenset())
            continue
        entries = frozenset(opponent_sets[b])
        if not entries:
            raise ForeignStrategy(f"empty opponent set for agent {b}")
        if not entries <= set(game.strategies[b]):
            raise ForeignStrategy(f"opponent set for agent {b} leaves its space")
        opponents.append(entries)
    return ReasoningScene(owner=owner, opponents=tuple(opponents))


def _scene_profiles(game: Game, scene: ReasoningScene, cap: int):
    """Iterate opponent profiles as full outcome templates (owner slot None).

    Keeps each opponent's strategies in declaration order so enumeration is
    deterministic.
    """
    axes = []
    size = 1
    for b in range(game.num_agents):
        if b == scene.owner:
            axes.append((None,))
        else:
            picked = [s for s in game.strategies[b] if s in scene.opponents[b]]
            axes.append(tuple(picked))
            size *= len(picked)
    if size > cap:
        raise SizeCap(f"opponent-profile product has {size} entries (cap {cap})")
    return itertools.product(*axes)


def dominates(
    game: Game,
    a: int,
    scene: ReasoningScene,
    s: Strategy,
    s_prime: Strategy,
    cap: int = DEFAULT_PROFILE_CAP,
) -> bool:
    """True iff ``s_prime`` strictly beats ``s`` on every opponent profile.

    Equivalence and incomparability on any profile both defeat dominance.
    """
    if scene.owner != a:
        raise SceneOwnerMismatch(f"scene owned by {scene.owner}, not {a}")
    space = game.strategies[a]
    if s not in space or s_prime not in space:
        raise ForeignStrategy((s, s_prime))
    for template in _scene_profiles(game, scene, cap):
        outcome = list(template)
        outcome[a] = s
        low = tuple(outcome)
        outcome[a] = s_prime
        high = tuple(outcome)
        if game.compare(a, low, high) != -1:
            return False
    return True


def rational_response(
    game: Game, a: int, scene: ReasoningScene, cap: int = DEFAULT_PROFILE_CAP
) -> frozenset:
    """Undominated strategies of ``a`` in ``scene``; never empty."""
    if scene.owner != a:
        raise SceneOwnerMismatch(f"scene owned by {scene.owner}, not {a}")
    space = game.strategies[a]
    survivors = []
    for s in space:
        if not any(
            s2 is not s and dominates(game, a, scene, s, s2, cap) for s2 in space
        ):
            survivors.append(s)
    return frozenset(survivors)


def _agent_names(count: int) -> tuple[str, ...]:
    letters = string.ascii_lowercase
    return tuple(
        letters[i] if i < len(letters) else f"ag{i}" for i in range(count)
    )


def make_guess_average_game(
    agent_count: int, max_int: int, agents: Sequence[str] | None = None
) -> Game:
    """Guess-two-thirds-of-the-others'-average over integers 1..max_int.

    Utility is the negated exact distance to the target, so preferences
    decide ties such as 5 vs 6 against a target of 17/3 correctly.
    """
    if agent_count < 2:
        raise TooFewAgents("guess-average needs at least two agents")
    if max_int < 1:
        raise TooFewAgents("strategy space must be nonempty")
    if agents is None:
        agents = _agent_names(agent_count)
    elif len(agents) != agent_count:
        raise TooFewAgents("agent name list does not match the agent count")
    space = tuple(range(1, max_int + 1))

    def utility(a: int, outcome: Outcome) -> Fraction:
        others = sum(outcome) - outcome[a]
        target = Fraction(2 * others, 3 * (agent_count - 1))
        return -abs(target - outcome[a])

    return utility_game(agents, [space] * agent_count, utility)


@dataclass(frozen=True)
class Quit:
    """The stay-out strategy of one agent in the sequence-override game."""

    agent: int


def alternating_sequences(num_agents: int, a: int, k: int) -> frozenset[tuple[int, ...]]:
    """Nonempty alternating agent sequences of length <= k starting with ``a``."""
    if k <= 0:
        return frozenset()
    out = {(a,)}
    for b in range(num_agents):
        if b != a:
            out.update((a,) + s for s in alternating_sequences(num_agents, b, k - 1))
    return frozenset(out)


def make_sequence_game(agents: Sequence[str], k: int) -> Game:
    """Override game over alternating agent sequences of length <= k.

    An agent either quits (utility 0) or plays a sequence starting with
    herself; the sequence wins (1) when its tail is exactly what the
    tail's head agent played, and loses (-1) otherwise.
    """
    if len(agents) < 2:
        raise TooFewAgents("the sequence game needs at least two agents")
    if k < 1:
        raise TooFewAgents("sequence length bound must be positive")
    num = len(agents)
    spaces = []
    for a in range(num):
        seqs = sorted(alternating_sequences(num, a, k))
        spaces.append((Quit(a),) + tuple(seqs))

    def utility(a: int, outcome: Outcome) -> int:
        s = outcome[a]
        if isinstance(s, Quit):
            return 0
        tail = s[1:]
        if tail and outcome[tail[0]] == tail:
            return 1
        return -1

    return utility_game(tuple(agents), spaces, utility)


def make_binary_game(agents: Sequence[str]) -> Game:
    """Two strategies per agent; each agent simply prefers playing 1."""
    if not agents:
        raise TooFewAgents("need at least one agent")

    def utility(a: int, outcome: Outcome) -> int:
        return outcome[a]

    return utility_game(tuple(agents), [(0, 1)] * len(agents), utility)


def strategy_label(game: Game, s: Strategy) -> str:
    """Human-readable token for a strategy, used by the CLI and tests."""
    if isinstance(s, Quit):
        return f"quit({game.agents[s.agent]})"
    if isinstance(s, tuple):
        return ".".join(game.agents[a] for a in s)
    return str(s)
