from dataclasses import dataclass
from dataclasses import field
from enum import Enum
from typing import FrozenSet
from typing import Hashable
from typing import Tuple


ProperElement = Tuple[Hashable, Hashable]


class Outcome(str, Enum):
    """
    Outcome of an inference protocol:

    - "inconsistent": the observation matches no proper element (bottom of the lattice).
    - "top": the observation carries no information (top of the lattice).
    - "elements": the observation is explained by a set of proper elements.
    """

    INCONSISTENT = "inconsistent"
    TOP = "top"
    ELEMENTS = "elements"

    @classmethod
    def from_str(cls, value):
        for k, v in cls.__members__.items():
            if v == value:
                return cls[k]

        raise ValueError(f"Invalid outcome: {value}")


@dataclass(frozen=True)
class Interpretation:

    outcome: Outcome
    elements: FrozenSet[ProperElement] = field(default_factory=frozenset)

    def __post_init__(self):
        """Perform certain attribute quality assertions"""

        object.__setattr__(self, "elements", frozenset(self.elements))

        if self.outcome != Outcome.ELEMENTS:
            assert not self.elements, "Extreme outcomes carry no elements"
        else:
            assert self.elements, "Must specify elements"

    @classmethod
    def inconsistent(cls) -> "Interpretation":
        return cls(Outcome.INCONSISTENT)

    @classmethod
    def top(cls) -> "Interpretation":
        return cls(Outcome.TOP)

    def __str__(self) -> str:
        if self.outcome != Outcome.ELEMENTS:
            return self.outcome.value
        return "{" + ", ".join(sorted(str(e) for e in self.elements)) + "}"


class LatticeExtreme(str, Enum):
    """
    Adjoined extremes of an inference lattice:

    - "top": 1̂, above every proper element.
    - "bottom": 0̂, below every proper element.
    """

    TOP = "top"
    BOTTOM = "bottom"

    @classmethod
    def from_str(cls, value):
        for k, v in cls.__members__.items():
            if v == value:
                return cls[k]

        raise ValueError(f"Invalid lattice extreme: {value}")
