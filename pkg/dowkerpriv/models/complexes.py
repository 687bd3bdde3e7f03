from enum import Enum
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Tuple

from ..utils.exceptions import DuplicateIdError
from ..utils.exceptions import UnknownIdError
from ..utils.various import antichain
from ..utils.various import is_subset
from ..utils.various import iter_bits
from ..utils.various import popcount


Simplex = FrozenSet[str]


class ComplexKind(str, Enum):
    """
    Kind of simplicial complex:

    - "void": the complex with no simplices at all, not even the empty one.
    - "nonvoid": any complex containing at least the empty simplex.
    """

    VOID = "void"
    NONVOID = "nonvoid"

    @classmethod
    def from_str(cls, value):
        for k, v in cls.__members__.items():
            if v == value:
                return cls[k]

        raise ValueError(f"Invalid complex kind: {value}")


class LinkOverride(str, Enum):
    """
    Special case forced on the Dowker complexes of a link relation:

    - "empty": both complexes are the empty complex {∅}.
    - "void": both complexes are void.
    """

    EMPTY = "empty"
    VOID = "void"

    @classmethod
    def from_str(cls, value):
        for k, v in cls.__members__.items():
            if v == value:
                return cls[k]

        raise ValueError(f"Invalid link override: {value}")


class SimplicialComplex:
    """
    Abstract simplicial complex stored through its maximal simplices.

    Simplices are bitmasks over an ordered vertex universe. A nonvoid complex
    always contains the empty simplex; the empty complex {∅} is stored as the
    single facet 0. The void complex has no facets at all.

    Parameters
    ----------
    universe: sequence of str
        Ordered vertex ids. Vertices need not belong to any simplex.
    facets: iterable of int (optional)
        Generating simplices as bitmasks; only the inclusion-maximal ones are kept
    kind: ComplexKind (optional)
        Default = ComplexKind.NONVOID
    """

    __slots__ = ("_universe", "_index", "_facets", "_kind")

    def __init__(
        self,
        universe: Sequence[str],
        facets: Iterable[int] = (),
        kind: ComplexKind = ComplexKind.NONVOID,
    ):
        self._universe = tuple(universe)
        self._index = {}
        for i, v in enumerate(self._universe):
            if v in self._index:
                raise DuplicateIdError(f"Duplicate vertex id: {v!r}")
            self._index[v] = i

        self._kind = ComplexKind(kind)
        if self._kind == ComplexKind.VOID:
            self._facets = ()
        else:
            masks = antichain(int(f) for f in facets)
            self._facets = tuple(masks) if masks else (0,)

        if any(f >> len(self._universe) for f in self._facets):
            raise ValueError("Facet references vertices outside the universe")

    @classmethod
    def void(cls, universe: Sequence[str] = ()) -> "SimplicialComplex":
        return cls(universe, kind=ComplexKind.VOID)

    @classmethod
    def empty(cls, universe: Sequence[str] = ()) -> "SimplicialComplex":
        return cls(universe, (0,))

    @classmethod
    def from_simplices(
        cls,
        simplices: Iterable[Iterable[str]],
        universe: Sequence[str] = None,
    ) -> "SimplicialComplex":
        """
        Builds a nonvoid complex from vertex-id simplices

        Parameters
        ----------
        simplices: iterable of iterables of str
            Generating simplices
        universe: sequence of str (optional)
            Vertex universe. Default = sorted union of the simplices

        Returns
        -------
            SimplicialComplex
        """

        simplices = [frozenset(s) for s in simplices]
        if universe is None:
            universe = sorted(set().union(*simplices)) if simplices else []

        index = {v: i for i, v in enumerate(universe)}
        masks = []
        for simplex in simplices:
            mask = 0
            for v in simplex:
                if v not in index:
                    raise UnknownIdError("vertex", v)
                mask |= 1 << index[v]
            masks.append(mask)

        return cls(universe, masks)

    @property
    def universe(self) -> Tuple[str, ...]:
        return self._universe

    @property
    def kind(self) -> ComplexKind:
        return self._kind

    @property
    def is_void(self) -> bool:
        return self._kind == ComplexKind.VOID

    @property
    def is_empty(self) -> bool:
        """Whether this is the empty complex {∅}"""
        return self._facets == (0,)

    @property
    def facet_masks(self) -> Tuple[int, ...]:
        return self._facets

    @property
    def facets(self) -> List[Simplex]:
        return [self.ids_of(f) for f in self._facets]

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for f in self._facets:
            mask |= f
        return mask

    @property
    def vertices(self) -> Simplex:
        return self.ids_of(self.vertex_mask)

    @property
    def dimension(self) -> int:
        """Largest simplex dimension; -1 for {∅} and the void complex"""
        if not self._facets:
            return -1
        return max(popcount(f) for f in self._facets) - 1

    def vertex_index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownIdError("vertex", v) from None

    def bits(self, ids: Iterable[str]) -> int:
        mask = 0
        for v in ids:
            mask |= 1 << self.vertex_index(v)
        return mask

    def ids_of(self, mask: int) -> Simplex:
        return frozenset(self._universe[i] for i in iter_bits(mask))

    def ordered(self, ids: Iterable[str]) -> List[str]:
        return sorted(ids, key=self.vertex_index)

    def contains_bits(self, mask: int) -> bool:
        return any(is_subset(mask, f) for f in self._facets)

    def contains(self, tau: Iterable[str]) -> bool:
        tau = list(tau)
        if any(v not in self._index for v in tau):
            return False
        return self.contains_bits(self.bits(tau))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._kind == other._kind and set(self.facets) == set(other.facets)

    def __hash__(self) -> int:
        return hash((self._kind, frozenset(self.facets)))

    def __repr__(self) -> str:
        return f"SimplicialComplex({self})"

    def __str__(self) -> str:
        """
        Formats the complex by its maximal simplices

        Returns
        -------
            "VOID", "{∅}" or the list of maximal simplices
        """

        if self.is_void:
            return "VOID"
        if self.is_empty:
            return "{∅}"

        facets = [
            "{" + ",".join(self._universe[i] for i in iter_bits(f)) + "}"
            for f in sorted(self._facets, key=lambda m: (-popcount(m), m))
        ]
        return "[" + ", ".join(facets) + "]"
