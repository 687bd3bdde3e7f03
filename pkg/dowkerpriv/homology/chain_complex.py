import logging

from typing import Dict
from typing import List
from typing import Tuple

from .gf2 import gf2_rank
from ..complex.operations import face_masks
from ..models import BettiVector
from ..models import SearchLimits
from ..models import SimplicialComplex
from ..utils.exceptions import PreconditionViolatedError
from ..utils.various import iter_bits

logger = logging.getLogger(__name__)


class ChainComplexZ2:
    """
    Reduced simplicial chain complex of a nonvoid complex over GF(2).

    Simplices of each dimension are listed in canonical order, starting with the empty
    simplex in dimension -1. The boundary of a k-simplex is stored as a bit-packed column
    over the (k-1)-simplices, so ∂_0 maps every vertex onto the empty simplex.

    Parameters
    ----------
    s: SimplicialComplex
        Nonvoid complex
    max_dim: int (optional)
        Highest dimension whose homology is needed. Simplices up to dimension max_dim + 1
        are enumerated. Default = None (all)
    limits: SearchLimits (optional)
    """

    def __init__(self, s: SimplicialComplex, max_dim: int = None, limits: SearchLimits = None):
        if s.is_void:
            raise PreconditionViolatedError("The void complex has no chain complex")
        if max_dim is not None and max_dim < 0:
            raise PreconditionViolatedError("max_dim must be non-negative")

        self.complex = s
        self.max_dim = max_dim
        self.simplices: Dict[int, List[int]] = face_masks(s, None if max_dim is None else max_dim + 1, limits)
        self.top_dimension = max(self.simplices)

        self._index = {k: {m: i for i, m in enumerate(masks)} for k, masks in self.simplices.items()}
        self.boundaries: Dict[int, List[int]] = {k: self._boundary_columns(k) for k in self.simplices if k >= 0}
        self._ranks = {k: gf2_rank(columns) for k, columns in self.boundaries.items()}

        if not self.check_boundary_squared():
            raise RuntimeError("Boundary of a boundary does not vanish")

        logger.debug("Chain complex with face counts %s", self.face_counts())

    def _boundary_columns(self, k: int) -> List[int]:
        lower = self._index[k - 1]
        columns = []
        for mask in self.simplices[k]:
            column = 0
            for v in iter_bits(mask):
                column |= 1 << lower[mask & ~(1 << v)]
            columns.append(column)
        return columns

    def rank(self, k: int) -> int:
        """Rank of ∂_k; zero outside the enumerated dimensions"""
        return self._ranks.get(k, 0)

    def check_boundary_squared(self) -> bool:
        """Whether ∂_{k-1} ∘ ∂_k vanishes for every k"""
        for k, columns in self.boundaries.items():
            if k < 1:
                continue
            lower = self.boundaries[k - 1]
            for column in columns:
                image = 0
                for i in iter_bits(column):
                    image ^= lower[i]
                if image:
                    return False
        return True

    def betti(self, k: int) -> int:
        """Reduced Betti number β_k = dim C_k - rank ∂_k - rank ∂_{k+1}"""
        if self.max_dim is not None and k > self.max_dim:
            raise PreconditionViolatedError(f"Homology above dimension {self.max_dim} was not computed")
        n = len(self.simplices.get(k, ()))
        return n - self.rank(k) - self.rank(k + 1)

    def face_counts(self) -> Tuple[int, ...]:
        """Number of simplices in dimensions 0, 1, ..., top"""
        return tuple(len(self.simplices[k]) for k in range(self.top_dimension + 1))

    def euler_characteristic(self, reduced: bool = False) -> int:
        chi = sum((-1) ** k * n for k, n in enumerate(self.face_counts()))
        return chi - 1 if reduced else chi


def reduced_betti(s: SimplicialComplex, max_dim: int = None, limits: SearchLimits = None) -> BettiVector:
    """
    Reduced Betti numbers over GF(2).

    Parameters
    ----------
    s: SimplicialComplex
        Nonvoid complex
    max_dim: int (optional)
        Compute homology up to this dimension only, enumerating the (max_dim + 1)-skeleton.
        Default = None
    limits: SearchLimits (optional)
        The face budget guards the enumeration

    Returns
    -------
    betti: BettiVector
        For the empty complex {∅} only the dimension -1 flag is set
    """

    if s.is_void:
        raise PreconditionViolatedError("Homology is not defined for the void complex")
    if s.is_empty:
        return BettiVector((), empty=True)

    cc = ChainComplexZ2(s, max_dim, limits)
    top = s.dimension if max_dim is None else min(s.dimension, max_dim)
    return BettiVector(tuple(cc.betti(k) for k in range(top + 1)))
