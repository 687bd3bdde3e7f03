import itertools
import logging
import networkx as nx

from dataclasses import dataclass
from typing import Callable
from typing import FrozenSet
from typing import Hashable
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple

from ..utils.exceptions import PreconditionViolatedError
from ..utils.exceptions import UnknownElementError

logger = logging.getLogger(__name__)


class FinitePoset:
    """
    Finite poset with an explicit element list and an order callback.

    Parameters
    ----------
    elements: iterable of hashable
    leq: callable
        leq(a, b) is True when a <= b
    """

    def __init__(self, elements: Iterable[Hashable], leq: Callable[[Hashable, Hashable], bool]):
        self._elements = tuple(elements)
        self._members = set(self._elements)
        if len(self._members) != len(self._elements):
            raise PreconditionViolatedError("Poset lists an element twice")
        self._leq = leq

    @classmethod
    def from_pairs(cls, elements: Iterable[Hashable], pairs: Iterable[Tuple[Hashable, Hashable]]) -> "FinitePoset":
        """
        Poset generated by explicit relations a <= b, closed under transitivity.

        Raises PreconditionViolatedError when the pairs contain a cycle.
        """

        elements = list(elements)
        graph = nx.DiGraph()
        graph.add_nodes_from(elements)
        for a, b in pairs:
            for x in (a, b):
                if x not in graph:
                    raise UnknownElementError(f"{x!r} is not an element of the poset")
            if a != b:
                graph.add_edge(a, b)

        if not nx.is_directed_acyclic_graph(graph):
            raise PreconditionViolatedError("Order pairs contain a cycle")

        closure = nx.transitive_closure_dag(graph)
        return cls(elements, lambda a, b: a == b or closure.has_edge(a, b))

    @classmethod
    def from_comparator(cls, elements: Iterable[Hashable], leq: Callable[[Hashable, Hashable], bool]) -> "FinitePoset":
        return cls(elements, leq)

    def __contains__(self, item) -> bool:
        try:
            return item in self._members
        except TypeError:
            return False

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def _check(self, item):
        if item not in self:
            raise UnknownElementError(f"{item!r} is not an element of the poset")

    def leq(self, a: Hashable, b: Hashable) -> bool:
        self._check(a)
        self._check(b)
        return bool(self._leq(a, b))

    def maximal(self, items: Iterable[Hashable]) -> List[Hashable]:
        items = list(items)
        return [a for a in items if not any(a != b and self.leq(a, b) for b in items)]

    def minimal(self, items: Iterable[Hashable]) -> List[Hashable]:
        items = list(items)
        return [a for a in items if not any(a != b and self.leq(b, a) for b in items)]


class SubsetPoset(FinitePoset):
    """
    Subsets of a universe ordered by inclusion, without materializing the powerset.

    Elements are frozensets of universe members.
    """

    def __init__(self, universe: Sequence[Hashable]):
        self.universe = frozenset(universe)
        self._order = tuple(universe)
        super().__init__((), lambda a, b: a <= b)

    def __contains__(self, item) -> bool:
        return isinstance(item, (set, frozenset)) and item <= self.universe

    def __iter__(self) -> Iterator[FrozenSet]:
        for k in range(len(self._order) + 1):
            for subset in itertools.combinations(self._order, k):
                yield frozenset(subset)

    def __len__(self) -> int:
        return 2 ** len(self.universe)


def _is_prefix(a: Sequence, b: Sequence) -> bool:
    return len(a) <= len(b) and b[: len(a)] == a


@dataclass(frozen=True)
class PrefixFreeSet:
    """
    Set of sequences none of which is a proper prefix of another.

    Sets are ordered by q1 <= q2 when every sequence of q1 is a prefix of some sequence of q2.

    Parameters
    ----------
    sequences: frozenset
        Strings or tuples
    """

    sequences: FrozenSet[Sequence]

    def __post_init__(self):
        object.__setattr__(self, "sequences", frozenset(self.sequences))

        for a in self.sequences:
            for b in self.sequences:
                if a != b and _is_prefix(a, b):
                    raise PreconditionViolatedError(f"{a!r} is a prefix of {b!r}")

    def leq(self, other: "PrefixFreeSet") -> bool:
        return all(any(_is_prefix(a, b) for b in other.sequences) for a in self.sequences)

    def __str__(self) -> str:
        return "{" + ", ".join(sorted(str(s) for s in self.sequences)) + "}"


def prefix_order_poset(sequences: Iterable[Sequence]) -> FinitePoset:
    """Sequences ordered by the prefix relation"""
    return FinitePoset.from_comparator(sequences, _is_prefix)


def prefix_free_poset(sets: Iterable[PrefixFreeSet]) -> FinitePoset:
    return FinitePoset.from_comparator(sets, lambda a, b: a.leq(b))
