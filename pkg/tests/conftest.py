import logging

from pathlib import Path
from typing import Dict
from typing import Iterable
from typing import Sequence

import pytest

from dowkerpriv.models import Action
from dowkerpriv.models import ActionKind
from dowkerpriv.models import Relation
from dowkerpriv.models import UncertainGraph
from dowkerpriv.relation import build_relation


# dowkerpriv output
logging.basicConfig(
    format="%(asctime)-5.5s %(name)-20.20s %(levelname)-7.7s %(message)s",
    datefmt="%H:%M",
    level=logging.WARNING,
)

FIXTURES = Path(__file__).parent / "fixtures"


def relation_from_rows(rows: Dict[str, Iterable[str]], attributes: Sequence[str] = None) -> Relation:
    """Relation whose individuals are the keys of `rows`, in order"""

    rows = {x: list(ys) for x, ys in rows.items()}
    if attributes is None:
        attributes = sorted({y for ys in rows.values() for y in ys})
    pairs = [(x, y) for x, ys in rows.items() for y in ys]
    return build_relation(pairs, list(rows), list(attributes))


def graph_from_actions(states: Sequence[str], actions: Sequence[tuple]) -> UncertainGraph:
    """Graph from (id, source, targets) triples; several targets make an action nondeterministic"""

    built = []
    for action_id, source, targets in actions:
        targets = tuple(targets)
        kind = ActionKind.DETERMINISTIC if len(targets) == 1 else ActionKind.NONDETERMINISTIC
        built.append(Action(action_id, source, targets, kind))
    return UncertainGraph(tuple(states), tuple(built))


@pytest.fixture(scope="function")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="function")
def make_relation():
    return relation_from_rows


@pytest.fixture(scope="function")
def staircase() -> Relation:
    return relation_from_rows({"1": "ab", "2": "bc", "3": "c", "4": "c"})


@pytest.fixture(scope="function")
def staircase_variant() -> Relation:
    return relation_from_rows({"1": "ab", "2": "bc", "3": "ac", "4": "c"})


@pytest.fixture(scope="function")
def travel() -> Relation:
    """Travel guide relation: authors 1-5, guides A-E, Möbius band attribute complex"""
    return relation_from_rows({"1": "ABE", "2": "ABC", "3": "BCD", "4": "CDE", "5": "ADE"})


@pytest.fixture(scope="function")
def tetrahedron() -> Relation:
    return relation_from_rows({"1": "abc", "2": "bcd", "3": "acd", "4": "abd"})


@pytest.fixture(scope="function")
def cyclic5() -> Relation:
    return relation_from_rows({"1": "abe", "2": "abc", "3": "bcd", "4": "cde", "5": "ade"})


@pytest.fixture(scope="function")
def double_mobius() -> Relation:
    """Two Möbius bands glued along their boundary"""
    return relation_from_rows(
        {
            "1": "abe",
            "2": "abc",
            "3": "bcd",
            "4": "cde",
            "5": "ade",
            "6": "abd",
            "7": "bce",
            "8": "acd",
            "9": "bde",
            "10": "ace",
        }
    )


@pytest.fixture(scope="function")
def three_states() -> UncertainGraph:
    return graph_from_actions(
        ["1", "2", "3"],
        [
            ("a1", "1", ["3"]),
            ("a2", "2", ["3"]),
            ("a3", "3", ["1", "2"]),
            ("a4", "2", ["1"]),
            ("a5", "1", ["2"]),
        ],
    )


@pytest.fixture(scope="function")
def four_states() -> UncertainGraph:
    return graph_from_actions(
        ["1", "2", "3", "4"],
        [
            ("e1", "1", ["2"]),
            ("e2", "2", ["3"]),
            ("e3", "3", ["1"]),
            ("a1", "1", ["3", "4"]),
            ("a2", "2", ["4"]),
            ("a3", "3", ["2", "4"]),
            ("b4", "4", ["1", "2", "3"]),
        ],
    )


@pytest.fixture(scope="function")
def dunce_hat() -> Relation:
    """Seventeen triangles with no free faces whose attribute complex is contractible"""
    return relation_from_rows(
        {
            "1": "dfh",
            "2": "def",
            "3": "fgh",
            "4": "cfg",
            "5": "aef",
            "6": "ace",
            "7": "cdh",
            "8": "bde",
            "9": "abg",
            "10": "bcg",
            "11": "agh",
            "12": "abh",
            "13": "bch",
            "14": "acd",
            "15": "abd",
            "16": "bce",
            "17": "acf",
        }
    )
