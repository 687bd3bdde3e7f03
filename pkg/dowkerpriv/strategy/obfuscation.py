import logging

from typing import Iterable
from typing import List
from typing import Sequence

from .strategies import action_relation
from .strategies import goal_states
from .strategies import is_acyclic_strategy
from .strategies import maximal_strategies
from .strategies import require_controllable
from .strategies import strategy_names
from ..galois.release import is_informative
from ..galois.release import release_profile
from ..models import ActionKind
from ..models import ReleaseProfile
from ..models import ReleaseSequence
from ..models import SearchLimits
from ..models import Strategy
from ..models import UncertainGraph
from ..utils.exceptions import NotCompleteError
from ..utils.exceptions import NotHamiltonianError
from ..utils.exceptions import NotMaximalError
from ..utils.exceptions import UnknownIdError

logger = logging.getLogger(__name__)


def _strategy_name(g: UncertainGraph, sigma: Iterable[str], limits: SearchLimits) -> str:
    sigma = frozenset(sigma)
    strategies = maximal_strategies(g, limits)
    for name, strategy in zip(strategy_names(strategies), strategies):
        if strategy == sigma:
            return name
    raise NotMaximalError(f"{sorted(sigma)} is not a maximal strategy")


def strategy_iars(
    g: UncertainGraph,
    sigma: Iterable[str],
    cap: int = None,
    limits: SearchLimits = None,
) -> ReleaseProfile:
    """
    Longest informative action release sequences that identify a maximal strategy.

    Parameters
    ----------
    g: UncertainGraph
    sigma: iterable of str
        Action ids of a maximal strategy
    cap: int (optional)
        Chains and sequences enumerated before truncation. Default = limits.chain_cap
    limits: SearchLimits (optional)

    Returns
    -------
    profile: ReleaseProfile
        Computed on the action relation; the individual is the strategy name
    """

    name = _strategy_name(g, sigma, limits)
    return release_profile(action_relation(g, limits), name, cap=cap, limits=limits)


def _goals_open(
    strategies: Sequence[Strategy],
    goals: Sequence[frozenset],
    prefix: frozenset,
    pending: frozenset,
) -> bool:
    """Whether each pending state is the only goal of some maximal strategy containing prefix"""

    singles = set()
    for strategy, goal in zip(strategies, goals):
        if len(goal) == 1 and prefix <= strategy:
            singles |= goal
    return pending <= singles


def goal_delay_sequence(g: UncertainGraph, v: str, limits: SearchLimits = None) -> ReleaseSequence:
    """
    Releases a complete strategy for v without revealing the goal before the last action.

    The result a_1, ..., a_{n-1} acts once at every state other than v. After any proper
    prefix, every state where no released action acts is still the single goal of some
    maximal strategy containing the prefix, so an observer cannot tell the goal.

    Parameters
    ----------
    g: UncertainGraph
        Fully controllable graph with at least two states
    v: str
        Goal state
    limits: SearchLimits (optional)

    Returns
    -------
        tuple of str
    """

    if v not in g.states:
        raise UnknownIdError("state", v)
    require_controllable(g, limits)

    strategies = maximal_strategies(g, limits)
    goals = [goal_states(g, s) for s in strategies]
    states = frozenset(g.states)
    n = len(states)

    def search(prefix: List[str], covered: frozenset):
        if len(prefix) == n - 1:
            return tuple(prefix)
        if not _goals_open(strategies, goals, frozenset(prefix), states - covered):
            return None

        for a in g.actions:
            if a.source == v or a.source in covered:
                continue
            if not is_acyclic_strategy(g, prefix + [a.id]):
                continue
            result = search(prefix + [a.id], covered | {a.source})
            if result is not None:
                return result
        return None

    sequence = search([], frozenset())
    if sequence is None:
        raise RuntimeError(f"No goal-delaying release sequence found for state {v}")

    logger.debug("Goal-delaying sequence for %s: %s", v, sequence)
    return sequence


def _rotate_cycle(g: UncertainGraph, cycle: Sequence[str]) -> List[str]:
    """Validates a Hamiltonian cycle of actions and returns its actions as a list"""

    actions = g.action_map()
    for a in cycle:
        if a not in actions:
            raise UnknownIdError("action", a)
    steps = [actions[a] for a in cycle]

    if len(steps) != g.n_states or {a.source for a in steps} != set(g.states):
        raise NotHamiltonianError("A Hamiltonian cycle acts exactly once at every state")
    for a in steps:
        if a.kind != ActionKind.DETERMINISTIC:
            raise NotHamiltonianError(f"Action {a.id} of the cycle is not deterministic")
    for a, b in zip(steps, steps[1:] + steps[:1]):
        if b.source not in a.targets:
            raise NotHamiltonianError(f"Action {b.id} does not start where {a.id} ends")
    return list(cycle)


def hamiltonian_iars(
    g: UncertainGraph,
    sigma: Iterable[str],
    cycle: Sequence[str],
    limits: SearchLimits = None,
) -> ReleaseSequence:
    """
    Informative release sequence of a complete strategy inside a maximal strategy, read off a
    Hamiltonian cycle of actions.

    The cycle is rotated so that its last action acts at the goal v of sigma. With b_i the
    action of sigma at the source of the i-th cycle action, b_{n-1}, ..., b_1 is released.

    Parameters
    ----------
    g: UncertainGraph
        Fully controllable graph
    sigma: iterable of str
        Maximal strategy with a single goal state
    cycle: sequence of str
        Deterministic actions, each starting where the previous one ends, acting once at
        every state
    limits: SearchLimits (optional)

    Returns
    -------
        tuple of str
    """

    sigma = frozenset(sigma)
    require_controllable(g, limits)
    cycle = _rotate_cycle(g, cycle)
    _strategy_name(g, sigma, limits)

    goal = goal_states(g, sigma)
    if len(goal) != 1:
        raise NotCompleteError(f"Strategy {sorted(sigma)} has goal states {sorted(goal)}, not a single one")
    (v,) = goal

    actions = g.action_map()
    start = next(i for i, a in enumerate(cycle) if actions[a].source == v)
    cycle = cycle[start + 1 :] + cycle[: start + 1]

    b = []
    for a in cycle[:-1]:
        state = actions[a].source
        b.append(next(x.id for x in g.actions if x.id in sigma and x.source == state))

    sequence = tuple(reversed(b))
    if not is_informative(action_relation(g, limits), sequence):
        raise RuntimeError(f"Release sequence {sequence} is not informative")
    return sequence
