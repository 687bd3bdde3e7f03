from dataclasses import dataclass
from typing import FrozenSet
from typing import Iterable
from typing import Tuple


ReleaseSequence = Tuple[str, ...]


def _format_ids(ids: Iterable[str]) -> str:
    ids = sorted(ids)
    if all(len(i) == 1 for i in ids):
        return "".join(ids)
    return ",".join(ids)


@dataclass(frozen=True)
class LabeledPair:
    """
    Element (σ, γ) of a doubly-labeled poset, with σ = ψ(γ) and γ = φ(σ).

    The adjoined extremes of a Galois lattice are labeled pairs as well, with
    an empty individual set (bottom) or an empty attribute set (top).
    """

    sigma: FrozenSet[str]
    gamma: FrozenSet[str]

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(self.sigma))
        object.__setattr__(self, "gamma", frozenset(self.gamma))

    def leq(self, other: "LabeledPair") -> bool:
        return self.sigma <= other.sigma

    def __str__(self) -> str:
        return f"({_format_ids(self.sigma) or '∅'}, {_format_ids(self.gamma) or '∅'})"


@dataclass(frozen=True)
class Chain:
    """
    Strictly descending chain of labeled pairs, largest element first
    """

    elements: Tuple[LabeledPair, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

        for upper, lower in zip(self.elements, self.elements[1:]):
            assert lower.sigma < upper.sigma, f"Chain is not strictly descending at {lower}"

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, item):
        return self.elements[item]

    def __str__(self) -> str:
        return " > ".join(str(e) for e in self.elements)


@dataclass(frozen=True)
class ReleaseProfile:
    """
    Longest informative release sequences that identify one individual.

    Parameters
    ----------
    individual: str
    target: LabeledPair
        Lattice element (ψφ({x}), φ({x})) reached once the individual is identified
    max_length: int
        Length of the longest informative sequence reaching the target
    chains: tuple of Chain
        Chains from the top of the lattice down to the target realizing `max_length`
    sequences: tuple of tuple of str
        Release sequences read off the chains
    """

    individual: str
    target: LabeledPair
    max_length: int
    chains: Tuple[Chain, ...]
    sequences: Tuple[ReleaseSequence, ...]
