import logging
import networkx as nx

from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Sequence

from ..complex.operations import boundary_complex
from ..homology.chain_complex import reduced_betti
from ..models import Action
from ..models import ActionKind
from ..models import Relation
from ..models import SearchLimits
from ..models import SimplicialComplex
from ..models import Strategy
from ..models import UncertainGraph
from ..models.limits import resolve_limits
from ..utils.exceptions import NotControllableError
from ..utils.exceptions import PreconditionViolatedError
from ..utils.exceptions import StochasticUnsupportedError
from ..utils.exceptions import TooLargeError
from ..utils.exceptions import UnknownIdError

logger = logging.getLogger(__name__)


def _require_analyzable(g: UncertainGraph, limits: SearchLimits):
    stochastic = [a.id for a in g.actions if a.kind == ActionKind.STOCHASTIC]
    if stochastic:
        raise StochasticUnsupportedError(
            f"Stochastic actions {stochastic} are not supported; model them as nondeterministic actions"
        )
    if len(g.actions) > limits.action_budget:
        raise TooLargeError(
            f"Graph has {len(g.actions)} actions, more than the budget of {limits.action_budget}",
            size=len(g.actions),
            limit=limits.action_budget,
        )


def edge_graph(actions: Iterable[Action], states: Iterable[str] = ()) -> nx.MultiDiGraph:
    """Directed multigraph of the underlying edges, keyed by action id"""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(states)
    for a in actions:
        for source, target in a.edges:
            graph.add_edge(source, target, key=a.id)
    return graph


def _resolve_actions(g: UncertainGraph, strategy: Iterable[str]) -> List[Action]:
    action_map = g.action_map()
    actions = []
    for action_id in strategy:
        if action_id not in action_map:
            raise UnknownIdError("action", action_id)
        actions.append(action_map[action_id])
    return actions


def is_acyclic_strategy(g: UncertainGraph, strategy: Iterable[str]) -> bool:
    """Whether the underlying edges of the actions contain no directed cycle"""
    return nx.is_directed_acyclic_graph(edge_graph(_resolve_actions(g, strategy), g.states))


def source_states(g: UncertainGraph, strategy: Iterable[str]) -> FrozenSet[str]:
    return frozenset(a.source for a in _resolve_actions(g, strategy))


def goal_states(g: UncertainGraph, strategy: Iterable[str]) -> FrozenSet[str]:
    """States at which the strategy prescribes no action"""
    return frozenset(g.states) - source_states(g, strategy)


def _creates_cycle(graph: nx.MultiDiGraph, a: Action) -> bool:
    return any(t == a.source or nx.has_path(graph, t, a.source) for t in a.targets)


def maximal_strategies(g: UncertainGraph, limits: SearchLimits = None) -> List[Strategy]:
    """
    Enumerates the maximal acyclic action sets of a graph.

    The search decides each action in turn, keeping it whenever its edges close no cycle with
    the actions kept so far. Actions that lie on no cycle of the whole graph belong to every
    maximal strategy and are never dropped.

    Parameters
    ----------
    g: UncertainGraph
        Graph with deterministic and nondeterministic actions only
    limits: SearchLimits (optional)
        `action_budget` bounds the number of actions

    Returns
    -------
    strategies: list of frozenset
        Sorted by the number of goal states, then by goal states and actions in graph order
    """

    limits = resolve_limits(limits)
    _require_analyzable(g, limits)

    actions = list(g.actions)
    full = edge_graph(actions, g.states)
    on_cycle = {a.id: _creates_cycle(full, a) for a in actions}

    graph = nx.MultiDiGraph()
    graph.add_nodes_from(g.states)
    chosen: List[Action] = []
    found = []

    def search(i: int):
        if i == len(actions):
            kept = {a.id for a in chosen}
            if all(_creates_cycle(graph, a) for a in actions if a.id not in kept):
                found.append(frozenset(kept))
            return

        a = actions[i]
        if not _creates_cycle(graph, a):
            for source, target in a.edges:
                graph.add_edge(source, target, key=a.id)
            chosen.append(a)
            search(i + 1)
            chosen.pop()
            for source, target in a.edges:
                graph.remove_edge(source, target, key=a.id)
            if not on_cycle[a.id]:
                return
        search(i + 1)

    search(0)

    state_index = {s: i for i, s in enumerate(g.states)}
    action_index = {a.id: i for i, a in enumerate(actions)}

    def order(strategy: Strategy):
        goals = sorted(state_index[s] for s in goal_states(g, strategy))
        return len(goals), goals, sorted(action_index[a] for a in strategy)

    found.sort(key=order)
    logger.debug("Found %s maximal strategies among %s actions", len(found), len(actions))
    return found


def strategy_names(strategies: Sequence[Strategy]) -> List[str]:
    return [f"s{i + 1}" for i in range(len(strategies))]


def strategy_complex(g: UncertainGraph, limits: SearchLimits = None) -> SimplicialComplex:
    """
    Strategy complex: the acyclic action sets, generated by the maximal strategies.

    A graph without acyclic actions has the empty complex {∅}.
    """

    strategies = maximal_strategies(g, limits)
    universe = list(g.action_ids)
    return SimplicialComplex.from_simplices(strategies, universe)


def action_relation(g: UncertainGraph, limits: SearchLimits = None) -> Relation:
    """
    Relation A between maximal strategies s1, s2, ... and actions, with the strategy complex as its attribute complex.

    Parameters
    ----------
    g: UncertainGraph
    limits: SearchLimits (optional)

    Returns
    -------
    relation: Relation
        Void when the graph has no actions
    """

    strategies = maximal_strategies(g, limits)
    if not g.actions:
        logger.warning("Graph has no actions; its only strategy is the empty one")
        return Relation(strategy_names(strategies), [], [0] * len(strategies), allow_void=True)

    index = {a: j for j, a in enumerate(g.action_ids)}
    rows = []
    for strategy in strategies:
        row = 0
        for a in strategy:
            row |= 1 << index[a]
        rows.append(row)
    return Relation(strategy_names(strategies), g.action_ids, rows)


def source_relation(g: UncertainGraph, limits: SearchLimits = None) -> Relation:
    """Relation B between maximal strategies and the states where they act, whose complex is the source complex"""

    strategies = maximal_strategies(g, limits)
    index = {s: j for j, s in enumerate(g.states)}
    rows = []
    for strategy in strategies:
        row = 0
        for s in source_states(g, strategy):
            row |= 1 << index[s]
        rows.append(row)
    return Relation(strategy_names(strategies), g.states, rows)


def strategy_goals(g: UncertainGraph, limits: SearchLimits = None) -> Dict[str, FrozenSet[str]]:
    """Goal states of each maximal strategy, by strategy name"""
    strategies = maximal_strategies(g, limits)
    return {name: goal_states(g, s) for name, s in zip(strategy_names(strategies), strategies)}


def source_complex(g: UncertainGraph, limits: SearchLimits = None) -> SimplicialComplex:
    """Source complex: the image of the strategy complex under the source map"""
    strategies = maximal_strategies(g, limits)
    return SimplicialComplex.from_simplices([source_states(g, s) for s in strategies], list(g.states))


def is_complete_strategy(g: UncertainGraph, strategy: Iterable[str], v: str) -> bool:
    """Whether the strategy is acyclic and acts at every state except v"""
    if v not in g.states:
        raise UnknownIdError("state", v)
    strategy = frozenset(strategy)
    return is_acyclic_strategy(g, strategy) and source_states(g, strategy) == frozenset(g.states) - {v}


def fully_controllable(g: UncertainGraph, limits: SearchLimits = None) -> bool:
    """
    Whether every state can be attained from every other state despite uncertain outcomes.

    Equivalent to the source complex being the boundary of the full simplex on the states.
    The answer is cross-checked against the reduced homology of the strategy complex, which
    must be that of a sphere of dimension n - 2 exactly for fully controllable graphs. A
    disagreement is logged as a warning and the source complex answer is returned.

    Parameters
    ----------
    g: UncertainGraph
    limits: SearchLimits (optional)

    Returns
    -------
        bool
    """

    controllable = source_complex(g, limits) == boundary_complex(list(g.states))

    try:
        betti = reduced_betti(strategy_complex(g, limits), limits=limits)
    except TooLargeError as e:
        logger.warning("Skipping the homology cross-check of controllability: %s", e)
        return controllable

    n = g.n_states
    if n == 1:
        sphere = betti.empty
    else:
        sphere = not betti.empty and betti.betti == (0,) * (n - 2) + (1,)

    if sphere != controllable:
        logger.warning(
            "Controllability %s disagrees with the strategy complex homology %s, keeping the source complex answer",
            controllable,
            betti,
        )
    return controllable


def require_controllable(g: UncertainGraph, limits: SearchLimits = None):
    if g.n_states < 2:
        raise PreconditionViolatedError("The graph needs at least two states")
    if not fully_controllable(g, limits):
        raise NotControllableError("The graph is not fully controllable")
