import logging

from typing import Hashable
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Tuple

from ..models import AttributeSet
from ..models import Relation
from ..models import SearchLimits
from ..models.limits import resolve_limits
from ..utils.exceptions import CapExceededError
from ..utils.exceptions import NotStableError
from ..utils.exceptions import PreconditionViolatedError
from ..utils.exceptions import VoidRelationError
from ..utils.various import iter_bits
from ..utils.various import popcount

logger = logging.getLogger(__name__)


def _greedy_cover(universe: int, sets: Sequence[int]) -> List[int]:
    chosen = []
    uncovered = universe
    while uncovered:
        best = max(range(len(sets)), key=lambda s: (popcount(sets[s] & uncovered), -s))
        chosen.append(best)
        uncovered &= ~sets[best]
    return chosen


def _min_set_cover(universe: int, sets: Sequence[int], node_cap: int) -> List[int]:
    """
    Exact minimum set cover by branch and bound.

    Parameters
    ----------
    universe: int
        Bitmask of the elements to cover
    sets: sequence of int
        Candidate sets as bitmasks
    node_cap: int
        Search nodes explored before giving up

    Returns
    -------
    cover: list of int or None
        Indices of a minimum cover, in increasing order; None when the sets cannot cover the universe
    """

    union = 0
    for s in sets:
        union |= s
    if universe & ~union:
        return None
    if universe == 0:
        return []

    best = sorted(_greedy_cover(universe, sets))
    largest = max(popcount(s & universe) for s in sets)
    nodes = 0

    def search(uncovered: int, chosen: List[int]):
        nonlocal best, nodes

        nodes += 1
        if nodes > node_cap:
            raise CapExceededError(
                f"Set cover search exceeded {node_cap} nodes",
                cap=node_cap,
                best=sorted(best),
            )

        if uncovered == 0:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return

        lower_bound = -(-popcount(uncovered) // largest)
        if len(chosen) + lower_bound >= len(best):
            return

        # Branch on the element covered by the fewest sets
        element = min(iter_bits(uncovered), key=lambda e: sum(1 for s in sets if s >> e & 1))
        candidates = [k for k, s in enumerate(sets) if s >> element & 1]
        candidates.sort(key=lambda k: -popcount(sets[k] & uncovered))

        for k in candidates:
            chosen.append(k)
            search(uncovered & ~sets[k], chosen)
            chosen.pop()

    search(universe, [])
    logger.debug("Set cover search explored %s nodes, optimum %s", nodes, len(best))
    return best


def min_identifying_set(
    r: Relation,
    sigma: Iterable[str],
    cap: int = None,
    limits: SearchLimits = None,
) -> AttributeSet:
    """
    Smallest set of shared attributes that singles out a group of individuals.

    Finds a minimum-cardinality χ ⊆ φ(σ) with ψ(χ) = σ. Each attribute of φ(σ) rules out
    the individuals outside σ that lack it, so the search is an exact set cover of X minus σ.

    Parameters
    ----------
    r: Relation
    sigma: iterable of str
        Individual ids, closed under association
    cap: int (optional)
        Search nodes explored before giving up. Default = limits.node_cap
    limits: SearchLimits (optional)

    Returns
    -------
    chi: frozenset of str
        A minimum identifying attribute set

    Raises
    ------
    NotStableError
        If ψ(φ(σ)) differs from σ
    CapExceededError
        If the search is truncated; the best set found is attached as `best`
    """

    if r.is_void:
        raise VoidRelationError(f"Operation needs a nonvoid relation, got {r!r}")

    limits = resolve_limits(limits)
    node_cap = limits.node_cap if cap is None else cap

    sigma_bits = r.individual_bits(sigma)
    gamma_bits = r.phi_bits(sigma_bits)
    if r.psi_bits(gamma_bits) != sigma_bits:
        raise NotStableError("The individual set is not closed under association")

    outside = r.full_individuals & ~sigma_bits
    attributes = list(iter_bits(gamma_bits))
    sets = [outside & ~r.cols[j] for j in attributes]

    try:
        cover = _min_set_cover(outside, sets, node_cap)
    except CapExceededError as error:
        error.best = r.attributes_of(sum(1 << attributes[k] for k in error.best))
        raise

    return r.attributes_of(sum(1 << attributes[k] for k in cover))


def mininf_decision(r: Relation, x: str, y: str, k: int, limits: SearchLimits = None) -> bool:
    """
    Decides whether at most k other attributes of x already imply attribute y.

    Parameters
    ----------
    r: Relation
    x: str
        Individual id
    y: str
        Attribute id, held by x
    k: int
        Largest admissible number of released attributes
    limits: SearchLimits (optional)

    Returns
    -------
        True if some γ ⊆ Y_x minus y with |γ| <= k has y in its attribute closure
    """

    i, j = r.individual_index(x), r.attribute_index(y)
    if not r.rows[i] >> j & 1:
        raise PreconditionViolatedError(f"Individual {x!r} does not have attribute {y!r}")
    if k < 0:
        raise PreconditionViolatedError("k must be non-negative")

    limits = resolve_limits(limits)
    lacking = r.full_individuals & ~r.cols[j]
    others = [jj for jj in iter_bits(r.rows[i]) if jj != j]
    sets = [lacking & ~r.cols[jj] for jj in others]

    cover = _min_set_cover(lacking, sets, limits.node_cap)
    return cover is not None and len(cover) <= k


def setcover_to_mininf(
    sets: Sequence[Iterable[Hashable]],
    k: int,
    universe: Iterable[Hashable] = None,
) -> Tuple[Relation, str, str, int]:
    """
    Reduces a set cover instance to a MinInf instance.

    Parameters
    ----------
    sets: sequence of iterables
        The sets S_1, ..., S_m
    k: int
        Cover size bound
    universe: iterable (optional)
        Elements to cover. Default = union of the sets

    Returns
    -------
    r: Relation
        Individuals x0 and one per element; column "0" is {x0}, column "i" holds x0 and
        the elements outside S_i
    x: str
        "x0"
    y: str
        "0"
    k: int
        Unchanged bound
    """

    sets = [set(s) for s in sets]
    if universe is None:
        universe = set().union(*sets) if sets else set()
    elements = sorted(universe, key=str)

    individuals = ["x0"] + [str(e) for e in elements]
    attributes = [str(i) for i in range(len(sets) + 1)]

    rows = [0] * len(individuals)
    rows[0] = (1 << len(attributes)) - 1
    for n, element in enumerate(elements):
        for i, s in enumerate(sets):
            if element not in s:
                rows[n + 1] |= 1 << (i + 1)

    return Relation(individuals, attributes, rows, allow_void=True), "x0", "0", k
