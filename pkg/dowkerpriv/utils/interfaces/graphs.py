import json
import logging

from pathlib import Path
from typing import Union

from dowkerpriv.models import Action
from dowkerpriv.models import ActionKind
from dowkerpriv.models import UncertainGraph
from dowkerpriv.utils.exceptions import ParseError
from dowkerpriv.utils.interfaces.documents import SCHEMA_VERSION
from dowkerpriv.utils.interfaces.documents import load_json_document

logger = logging.getLogger(__name__)


def parse_graph(data: Union[bytes, str]) -> UncertainGraph:
    """
    Parses a graph with uncertain actions.

    The document lists the states and the actions, each action as an object with "id",
    "source", "targets" and an optional "kind" ("deterministic", "nondeterministic" or
    "stochastic"). A missing kind is deterministic for one target and nondeterministic for
    several.

    Parameters
    ----------
    data: bytes or str
        JSON document

    Returns
    -------
        UncertainGraph
    """

    document = load_json_document(data)
    for key in ("states", "actions"):
        if key not in document:
            raise ParseError(f"Graph document is missing {key!r}")

    actions = []
    for i, entry in enumerate(document["actions"]):
        try:
            targets = [str(t) for t in entry["targets"]]
            default_kind = ActionKind.DETERMINISTIC if len(targets) == 1 else ActionKind.NONDETERMINISTIC
            kind = ActionKind.from_str(entry.get("kind", default_kind.value))
            actions.append(Action(str(entry["id"]), str(entry["source"]), tuple(targets), kind))
        except (KeyError, TypeError) as e:
            raise ParseError(f"Action {i} is malformed: missing or invalid {e}") from None

    graph = UncertainGraph(tuple(str(s) for s in document["states"]), tuple(actions))
    logger.debug("Parsed graph with %s states and %s actions", graph.n_states, len(graph.actions))
    return graph


def serialize_graph(g: UncertainGraph) -> bytes:
    document = {
        "schema_version": SCHEMA_VERSION,
        "states": list(g.states),
        "actions": [
            {"id": a.id, "source": a.source, "targets": list(a.targets), "kind": a.kind.value} for a in g.actions
        ],
    }
    return (json.dumps(document, indent=2) + "\n").encode("utf-8")


def read_graph(path: Union[str, Path]) -> UncertainGraph:
    return parse_graph(Path(path).read_bytes())
