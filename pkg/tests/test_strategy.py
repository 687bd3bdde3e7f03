import logging
import pytest

from conftest import graph_from_actions
from dowkerpriv.complex import dowker_attribute_complex
from dowkerpriv.complex import boundary_complex
from dowkerpriv.homology import reduced_betti
from dowkerpriv.models import Action
from dowkerpriv.models import ActionKind
from dowkerpriv.models import BettiVector
from dowkerpriv.models import SearchLimits
from dowkerpriv.models import UncertainGraph
from dowkerpriv.strategy import action_relation
from dowkerpriv.strategy import fully_controllable
from dowkerpriv.strategy import goal_delay_sequence
from dowkerpriv.strategy import hamiltonian_iars
from dowkerpriv.strategy import is_acyclic_strategy
from dowkerpriv.strategy import is_complete_strategy
from dowkerpriv.strategy import maximal_strategies
from dowkerpriv.strategy import source_complex
from dowkerpriv.strategy import source_relation
from dowkerpriv.strategy import strategy_complex
from dowkerpriv.strategy import strategy_goals
from dowkerpriv.strategy import strategy_iars
from dowkerpriv.strategy import strategies
from dowkerpriv.utils.exceptions import NotControllableError
from dowkerpriv.utils.exceptions import NotHamiltonianError
from dowkerpriv.utils.exceptions import NotMaximalError
from dowkerpriv.utils.exceptions import StochasticUnsupportedError
from dowkerpriv.utils.exceptions import TooLargeError
from dowkerpriv.utils.exceptions import UnknownIdError


@pytest.fixture(scope="function")
def triangle() -> UncertainGraph:
    """Deterministic cycle 1 -> 2 -> 3 -> 1"""
    return graph_from_actions(["1", "2", "3"], [("c1", "1", ["2"]), ("c2", "2", ["3"]), ("c3", "3", ["1"])])


def test_maximal_strategies_of_small_graph(three_states):
    strategies = maximal_strategies(three_states)
    assert strategies == [
        frozenset({"a3", "a4"}),
        frozenset({"a3", "a5"}),
        frozenset({"a1", "a2", "a4"}),
        frozenset({"a1", "a2", "a5"}),
    ]
    assert strategy_goals(three_states) == {
        "s1": frozenset({"1"}),
        "s2": frozenset({"2"}),
        "s3": frozenset({"3"}),
        "s4": frozenset({"3"}),
    }


def test_maximal_strategies_with_shared_goals(four_states):
    strategies = maximal_strategies(four_states)
    assert len(strategies) == 7
    assert strategies[3] == frozenset({"e1", "e3", "a2", "a3"})
    assert strategies[4] == frozenset({"e1", "a1", "a2", "a3"})

    goals = strategy_goals(four_states)
    assert goals["s6"] == frozenset({"1", "4"})
    assert goals["s7"] == frozenset({"3", "4"})


def test_strategy_predicates(three_states):
    assert is_acyclic_strategy(three_states, {"a3", "a4"})
    assert not is_acyclic_strategy(three_states, {"a4", "a5"}), "2 -> 1 -> 2 is a cycle"
    assert is_complete_strategy(three_states, {"a3", "a4"}, "1")
    assert not is_complete_strategy(three_states, {"a3"}, "1")

    with pytest.raises(UnknownIdError):
        is_acyclic_strategy(three_states, {"a9"})


def test_action_relation_models_strategy_complex(three_states, four_states):
    for g in (three_states, four_states):
        a = action_relation(g)
        assert dowker_attribute_complex(a) == strategy_complex(g)
        assert dowker_attribute_complex(source_relation(g)) == source_complex(g)

    b = source_relation(three_states)
    assert b.row("s1") == {"2", "3"}
    assert b.row("s4") == {"1", "2"}


def test_controllability(three_states, four_states, triangle):
    assert fully_controllable(three_states)
    assert fully_controllable(four_states)
    assert fully_controllable(triangle)
    assert source_complex(triangle) == boundary_complex(["1", "2", "3"])
    assert reduced_betti(strategy_complex(triangle)).betti == (0, 1), "Three actions around a circle"

    one_way = graph_from_actions(["1", "2"], [("c", "1", ["2"])])
    assert not fully_controllable(one_way)


def test_controllability_disagreement_is_logged(three_states, monkeypatch, caplog):
    monkeypatch.setattr(strategies, "reduced_betti", lambda *args, **kwargs: BettiVector(betti=(2,)))

    with caplog.at_level(logging.WARNING, logger="dowkerpriv.strategy.strategies"):
        assert fully_controllable(three_states), "The source complex answer is kept"
    assert "disagrees with the strategy complex homology" in caplog.text


def test_strategy_iars(three_states, four_states):
    profile = strategy_iars(three_states, {"a3", "a4"})
    assert profile.individual == "s1"
    assert profile.max_length == 2
    assert set(profile.sequences) == {("a3", "a4"), ("a4", "a3")}

    profile = strategy_iars(four_states, {"e1", "a1", "a2", "a3"})
    assert profile.max_length == 4
    assert len(profile.chains) == 4

    with pytest.raises(NotMaximalError):
        strategy_iars(three_states, {"a3"})


def test_goal_delay_sequence(three_states, four_states):
    assert goal_delay_sequence(three_states, "3") == ("a4", "a1")
    assert goal_delay_sequence(four_states, "4") == ("e1", "e3", "a2")

    two_states = graph_from_actions(["1", "2"], [("c1", "1", ["2"]), ("c2", "2", ["1"])])
    assert goal_delay_sequence(two_states, "1") == ("c2",)

    with pytest.raises(UnknownIdError):
        goal_delay_sequence(three_states, "9")

    one_way = graph_from_actions(["1", "2"], [("c", "1", ["2"])])
    with pytest.raises(NotControllableError):
        goal_delay_sequence(one_way, "2")


def test_hamiltonian_iars(triangle):
    assert hamiltonian_iars(triangle, {"c1", "c2"}, ["c1", "c2", "c3"]) == ("c2", "c1")
    assert hamiltonian_iars(triangle, {"c1", "c2"}, ["c3", "c1", "c2"]) == ("c2", "c1"), "Rotation does not matter"

    with pytest.raises(NotHamiltonianError):
        hamiltonian_iars(triangle, {"c1", "c2"}, ["c1", "c2"])
    with pytest.raises(NotMaximalError):
        hamiltonian_iars(triangle, {"c1"}, ["c1", "c2", "c3"])


def test_unsupported_graphs(four_states):
    coin = UncertainGraph(
        ("1", "2"),
        (Action("flip", "1", ("1", "2"), ActionKind.STOCHASTIC), Action("back", "2", ("1",))),
    )
    with pytest.raises(StochasticUnsupportedError):
        maximal_strategies(coin)

    with pytest.raises(TooLargeError):
        maximal_strategies(four_states, limits=SearchLimits(action_budget=3))
