from dataclasses import dataclass
from enum import Enum
from typing import Dict
from typing import FrozenSet
from typing import Tuple

from ..utils.exceptions import DuplicateIdError
from ..utils.exceptions import UnknownIdError


Strategy = FrozenSet[str]


class ActionKind(str, Enum):
    """
    Kind of graph action:

    - "deterministic": the action always moves to its single target.
    - "nondeterministic": the action moves to any one of its targets, adversarially.
    - "stochastic": the action moves to its targets with some probabilities (not analyzable).
    """

    DETERMINISTIC = "deterministic"
    NONDETERMINISTIC = "nondeterministic"
    STOCHASTIC = "stochastic"

    @classmethod
    def from_str(cls, value):
        for k, v in cls.__members__.items():
            if v == value:
                return cls[k]

        raise ValueError(f"Invalid action kind: {value}")


@dataclass(frozen=True)
class Action:

    id: str
    source: str
    targets: Tuple[str, ...]
    kind: ActionKind = ActionKind.DETERMINISTIC

    def __str__(self) -> str:
        """
        Formats the action in a nice way

        Returns
        -------
            Formatted action string
        """

        return f"{self.id}: {self.source} -> {{{', '.join(self.targets)}}} ({self.kind.value})"

    def __post_init__(self):
        """Perform certain attribute quality assertions"""

        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "kind", ActionKind(self.kind))

        if len(self.targets) == 0:
            raise ValueError(f"Action {self.id} has no target states")
        if len(set(self.targets)) != len(self.targets):
            raise ValueError(f"Action {self.id} lists a target state twice")
        if self.kind == ActionKind.DETERMINISTIC and len(self.targets) != 1:
            raise ValueError(f"Deterministic action {self.id} must have exactly one target")

    @property
    def edges(self) -> Tuple[Tuple[str, str], ...]:
        return tuple((self.source, t) for t in self.targets)


@dataclass(frozen=True)
class UncertainGraph:
    """
    Directed graph whose actions may have uncertain outcomes.

    Parameters
    ----------
    states: tuple of str
        Ordered state ids
    actions: tuple of Action
        Ordered actions; their sources and targets must be known states
    """

    states: Tuple[str, ...]
    actions: Tuple[Action, ...]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "actions", tuple(self.actions))

        if len(self.states) == 0:
            raise ValueError("Graph has no states")
        if len(set(self.states)) != len(self.states):
            raise DuplicateIdError("Graph lists a state twice")

        known = set(self.states)
        action_ids = set()
        for action in self.actions:
            if action.id in action_ids:
                raise DuplicateIdError(f"Duplicate action id: {action.id!r}")
            action_ids.add(action.id)
            for state in (action.source,) + action.targets:
                if state not in known:
                    raise UnknownIdError("state", state)

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def action_ids(self) -> Tuple[str, ...]:
        return tuple(a.id for a in self.actions)

    def action_map(self) -> Dict[str, Action]:
        return {a.id: a for a in self.actions}

    def action(self, action_id: str) -> Action:
        for a in self.actions:
            if a.id == action_id:
                return a
        raise UnknownIdError("action", action_id)
