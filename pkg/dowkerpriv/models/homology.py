from dataclasses import dataclass
from typing import Optional
from typing import Tuple


@dataclass(frozen=True)
class BettiVector:
    """
    Reduced Betti numbers over GF(2).

    Parameters
    ----------
    betti: tuple of int
        β_0, ..., β_d; trailing zeros are trimmed
    empty: bool (optional)
        Whether the complex is {∅}, the only complex with reduced homology in dimension -1.
        Default = False
    """

    betti: Tuple[int, ...] = ()
    empty: bool = False

    def __post_init__(self):
        """Perform certain attribute quality assertions"""

        betti = list(self.betti)
        while betti and betti[-1] == 0:
            betti.pop()
        assert all(b >= 0 for b in betti), "Betti numbers cannot be negative"
        if self.empty:
            assert not betti, "The empty complex has no homology in non-negative dimensions"
        object.__setattr__(self, "betti", tuple(int(b) for b in betti))

    def __getitem__(self, k: int) -> int:
        if k == -1:
            return int(self.empty)
        if 0 <= k < len(self.betti):
            return self.betti[k]
        return 0

    def __str__(self) -> str:
        if self.empty:
            return "β_-1=1"
        return "(" + ", ".join(str(b) for b in self.betti) + ")"

    @property
    def is_acyclic(self) -> bool:
        """Whether all reduced Betti numbers vanish, as for a contractible complex"""
        return not self.empty and not self.betti

    @property
    def top_dimension(self) -> int:
        """Largest dimension with nonzero homology; -1 if there is none"""
        return len(self.betti) - 1

    def nonzero_dimensions(self) -> Tuple[int, ...]:
        return tuple(k for k, b in enumerate(self.betti) if b)

    def padded(self, length: int) -> Tuple[int, ...]:
        return tuple(self[k] for k in range(length))


@dataclass(frozen=True)
class LinkRecord:
    """
    Survey of the link of one identifiable individual.

    Parameters
    ----------
    individual: str
    raw_betti: BettiVector
        Betti numbers of the link's attribute complex
    betti: BettiVector
        Betti numbers after the cone apexes have been stripped
    longest_iars: int
        Length of the longest informative release sequence of the link relation
    isotropic_counts: tuple of int
        Number of isotropic attribute sets of the link relation, indexed by size
    link_individuals: int
        Individuals of the link relation
    link_attributes: int
        Attributes of the link relation
    """

    individual: str
    raw_betti: BettiVector
    betti: BettiVector
    longest_iars: int
    isotropic_counts: Tuple[int, ...]
    link_individuals: int
    link_attributes: int

    @property
    def link_size(self) -> int:
        return self.link_individuals


@dataclass(frozen=True)
class ScatterPoint:

    individual: str
    h: int
    i: int
    h_root: float
    log_i: Optional[float]
    link_size: int


@dataclass(frozen=True)
class ChainBoundEntry:

    k: int
    bound: int
    actual: int

    @property
    def holds(self) -> bool:
        return self.actual >= self.bound


@dataclass(frozen=True)
class ChainBoundReport:

    betti: BettiVector
    entries: Tuple[ChainBoundEntry, ...]

    @property
    def holds(self) -> bool:
        return all(e.holds for e in self.entries)
