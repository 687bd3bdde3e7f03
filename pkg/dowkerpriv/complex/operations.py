import logging

from scipy.special import comb
from typing import Dict
from typing import Iterable
from typing import List
from typing import Sequence

from ..models import SearchLimits
from ..models import Simplex
from ..models import SimplicialComplex
from ..models.limits import resolve_limits
from ..utils.exceptions import PreconditionViolatedError
from ..utils.exceptions import TooLargeError
from ..utils.exceptions import UniverseOverlapError
from ..utils.various import is_subset
from ..utils.various import iter_bits
from ..utils.various import iter_submasks
from ..utils.various import popcount

logger = logging.getLogger(__name__)


def _sorted_masks(masks: Iterable[int]) -> List[int]:
    return sorted(masks, key=lambda m: (popcount(m), m))


def _reindexed(s: SimplicialComplex, keep: int, facets: Iterable[int]) -> SimplicialComplex:
    """Complex on the vertices of `keep`, with facets given over the original universe"""

    positions = list(iter_bits(keep))
    new_index = {old: new for new, old in enumerate(positions)}
    new_facets = []
    for f in facets:
        mask = 0
        for old in iter_bits(f):
            mask |= 1 << new_index[old]
        new_facets.append(mask)
    return SimplicialComplex([s.universe[i] for i in positions], new_facets)


def contains(s: SimplicialComplex, tau: Iterable[str]) -> bool:
    """Whether tau is a simplex of s"""
    return s.contains(tau)


def _face_bound(s: SimplicialComplex, max_dim: int = None) -> int:
    total = 0
    for f in s.facet_masks:
        size = popcount(f)
        top = size if max_dim is None else min(size, max_dim + 1)
        total += sum(comb(size, k, exact=True) for k in range(top + 1))
    return total


def face_masks(s: SimplicialComplex, max_dim: int = None, limits: SearchLimits = None) -> Dict[int, List[int]]:
    """
    Enumerates the simplices of a complex by dimension.

    Parameters
    ----------
    s: SimplicialComplex
    max_dim: int (optional)
        Skip simplices of larger dimension. Default = None (all)
    limits: SearchLimits (optional)

    Returns
    -------
    faces: dict
        Dimension (starting at -1 for the empty simplex) -> sorted bitmasks
    """

    limits = resolve_limits(limits)
    if s.is_void:
        return {}

    bound = _face_bound(s, max_dim)
    if bound > limits.face_budget:
        raise TooLargeError(
            f"Complex may have up to {bound} faces, more than the budget of {limits.face_budget}; "
            f"pass max_dim to work on a skeleton",
            size=bound,
            limit=limits.face_budget,
        )

    seen = set()
    for f in s.facet_masks:
        for sub in iter_submasks(f):
            if max_dim is None or popcount(sub) <= max_dim + 1:
                seen.add(sub)

    by_dim = {}
    for mask in _sorted_masks(seen):
        by_dim.setdefault(popcount(mask) - 1, []).append(mask)
    return by_dim


def faces(s: SimplicialComplex, max_dim: int = None, limits: SearchLimits = None) -> List[Simplex]:
    """
    Lists all simplices of a complex, smallest first.

    Enumeration is refused with a TooLargeError when the complex could exceed the face budget.
    """

    by_dim = face_masks(s, max_dim, limits)
    return [s.ids_of(m) for dim in sorted(by_dim) for m in by_dim[dim]]


def free_face_masks(s: SimplicialComplex) -> List[int]:
    """Bitmasks of the simplices properly contained in exactly one maximal simplex"""

    if s.is_void:
        raise PreconditionViolatedError("The void complex has no faces")

    facets = s.facet_masks
    free = []
    for f in facets:
        overlaps = [f & g for g in facets if g != f]
        for sub in iter_submasks(f):
            if sub == f:
                continue
            if not any(is_subset(sub, o) for o in overlaps):
                free.append(sub)
    return _sorted_masks(free)


def free_faces(s: SimplicialComplex) -> List[Simplex]:
    """
    Simplices properly contained in exactly one maximal simplex.

    A free face lets an observer infer the unique maximal simplex above it.

    Parameters
    ----------
    s: SimplicialComplex
        Nonvoid complex

    Returns
    -------
    free: list of frozenset
        Free faces, smallest first, the empty simplex included when it qualifies
    """

    return [s.ids_of(m) for m in free_face_masks(s)]


def link(s: SimplicialComplex, tau: Iterable[str]) -> SimplicialComplex:
    """
    Link of tau: the simplices disjoint from tau whose union with tau is a simplex.

    The link of a set that is not a simplex is void. The result lives on the universe minus tau.
    """

    if s.is_void:
        return SimplicialComplex.void(s.universe)

    tau = list(tau)
    if any(v not in s.universe for v in tau):
        return SimplicialComplex.void(s.universe)

    tau_bits = s.bits(tau)
    keep = ((1 << len(s.universe)) - 1) & ~tau_bits
    if not s.contains_bits(tau_bits):
        return SimplicialComplex.void([s.universe[i] for i in iter_bits(keep)])

    facets = [f & ~tau_bits for f in s.facet_masks if is_subset(tau_bits, f)]
    return _reindexed(s, keep, facets)


def deletion(s: SimplicialComplex, tau: Iterable[str]) -> SimplicialComplex:
    """Subcomplex of the simplices avoiding every vertex of tau, on the universe minus tau"""

    if s.is_void:
        return SimplicialComplex.void(s.universe)

    tau_bits = s.bits(tau)
    keep = ((1 << len(s.universe)) - 1) & ~tau_bits
    return _reindexed(s, keep, [f & ~tau_bits for f in s.facet_masks])


def closed_star(s: SimplicialComplex, tau: Iterable[str]) -> SimplicialComplex:
    """Subcomplex generated by the maximal simplices containing tau; void if tau is not a simplex"""

    tau_bits = s.bits(tau)
    if s.is_void or not s.contains_bits(tau_bits):
        return SimplicialComplex.void(s.universe)
    return SimplicialComplex(s.universe, [f for f in s.facet_masks if is_subset(tau_bits, f)])


def join(s1: SimplicialComplex, s2: SimplicialComplex) -> SimplicialComplex:
    """
    Simplicial join: all unions of a simplex of s1 with a simplex of s2.

    Parameters
    ----------
    s1: SimplicialComplex
    s2: SimplicialComplex
        Complex on a universe disjoint from that of s1

    Returns
    -------
        SimplicialComplex on the concatenated universes
    """

    shared = set(s1.universe) & set(s2.universe)
    if shared:
        raise UniverseOverlapError(f"Cannot join complexes sharing vertices {sorted(shared)}")

    universe = s1.universe + s2.universe
    if s1.is_void or s2.is_void:
        return SimplicialComplex.void(universe)

    shift = len(s1.universe)
    return SimplicialComplex(universe, [f1 | (f2 << shift) for f1 in s1.facet_masks for f2 in s2.facet_masks])


def boundary_complex(vertices: Sequence[str]) -> SimplicialComplex:
    """
    All proper subsets of a vertex set.

    The boundary of a single vertex is the empty complex {∅}; the boundary of the empty
    set is void.
    """

    vertices = list(vertices)
    if not vertices:
        return SimplicialComplex.void()

    full = (1 << len(vertices)) - 1
    return SimplicialComplex(vertices, [full & ~(1 << i) for i in range(len(vertices))])


def minimal_nonfaces(s: SimplicialComplex, limits: SearchLimits = None) -> List[Simplex]:
    """
    Vertex sets that are not simplices although all their proper subsets are.

    Vertices of the universe lying in no simplex are minimal nonfaces of size one.
    Candidates are generated level by level from the faces of the previous level.

    Parameters
    ----------
    s: SimplicialComplex
    limits: SearchLimits (optional)

    Returns
    -------
    nonfaces: list of frozenset
        Minimal nonfaces, smallest first
    """

    if s.is_void:
        return [frozenset()]

    limits = resolve_limits(limits)
    nonfaces = []
    level = []
    for i in range(len(s.universe)):
        if s.contains_bits(1 << i):
            level.append(1 << i)
        else:
            nonfaces.append(1 << i)

    explored = len(level)
    while level:
        faces_here = set(level)
        candidates = set()
        for a in level:
            for b in level:
                union = a | b
                if a < b and popcount(union) == popcount(a) + 1:
                    candidates.add(union)

        next_level = []
        for candidate in _sorted_masks(candidates):
            if any(candidate & ~(1 << i) not in faces_here for i in iter_bits(candidate)):
                continue
            if s.contains_bits(candidate):
                next_level.append(candidate)
            else:
                nonfaces.append(candidate)

        explored += len(candidates)
        if explored > limits.face_budget:
            raise TooLargeError(
                f"Minimal nonface search explored more than {limits.face_budget} candidates",
                size=explored,
                limit=limits.face_budget,
            )
        level = next_level

    return [s.ids_of(m) for m in _sorted_masks(nonfaces)]


def strip_cone_apexes(s: SimplicialComplex) -> SimplicialComplex:
    """
    Removes the vertices shared by all maximal simplices.

    A complex with a single maximal simplex is returned unchanged; otherwise every
    common vertex (cone apex) is dropped from the simplices and the universe at once.
    """

    if s.is_void or len(s.facet_masks) <= 1:
        return s

    common = (1 << len(s.universe)) - 1
    for f in s.facet_masks:
        common &= f
    if common == 0:
        return s

    logger.debug("Stripping cone apexes %s", sorted(s.ids_of(common)))
    keep = ((1 << len(s.universe)) - 1) & ~common
    return _reindexed(s, keep, [f & ~common for f in s.facet_masks])
