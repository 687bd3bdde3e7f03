import itertools
import logging
import networkx as nx

from typing import List
from typing import Sequence
from typing import Tuple

from .poset import GaloisLattice
from .poset import galois_lattice
from ..models import Chain
from ..models import Relation
from ..models import ReleaseProfile
from ..models import ReleaseSequence
from ..models import SearchLimits
from ..models.limits import resolve_limits
from ..utils.exceptions import CapExceededError
from ..utils.exceptions import NotInformativeError
from ..utils.exceptions import NotMaximalError
from ..utils.exceptions import PreconditionViolatedError

logger = logging.getLogger(__name__)


def is_informative(r: Relation, seq: Sequence[str]) -> bool:
    """
    Whether no attribute of the sequence can be inferred from those released before it.

    Parameters
    ----------
    r: Relation
    seq: sequence of str
        Attribute ids in release order

    Returns
    -------
        True if y_i is outside the attribute closure of y_1, ..., y_{i-1} for every i
    """

    released = 0
    for y in seq:
        j = r.attribute_index(y)
        if r.attribute_closure_bits(released) >> j & 1:
            return False
        released |= 1 << j
    return True


def _check_maximal(lattice: GaloisLattice, chain: Chain):
    elements = list(chain)
    if not elements or elements[0] != lattice.top or elements[-1] != lattice.bottom:
        raise NotMaximalError("Chain must run from the top to the bottom of the lattice")
    for upper, lower in zip(elements, elements[1:]):
        if upper not in lattice or lower not in lattice or not lattice.hasse.has_edge(upper, lower):
            raise NotMaximalError(f"{lower} is not covered by {upper}")


def _selections(
    r: Relation,
    chain: Chain,
    enumerate_all: bool,
    cap: int,
) -> List[ReleaseSequence]:
    steps = []
    for upper, lower in zip(chain, chain[1:]):
        steps.append(sorted(lower.gamma - upper.gamma))

    if not enumerate_all:
        return [tuple(step[0] for step in steps)]

    sequences = []
    for selection in itertools.product(*steps):
        if len(sequences) >= cap:
            raise CapExceededError(f"More than {cap} release sequences", cap=cap, best=sequences)
        sequences.append(tuple(selection))
    return sequences


def iars_from_chain(
    r: Relation,
    chain: Chain,
    enumerate_all: bool = False,
    cap: int = None,
    limits: SearchLimits = None,
) -> List[ReleaseSequence]:
    """
    Informative release sequences read off a maximal chain of the Galois lattice.

    Walking down the chain, each step releases one attribute newly gained at that step.
    After i releases the attribute closure equals the attribute set of the i-th element.

    Parameters
    ----------
    r: Relation
    chain: Chain
        Maximal chain of the Galois lattice, from top to bottom, of length at least 1
    enumerate_all: bool (optional)
        Return every admissible selection instead of the canonical one, which picks the
        lexicographically least attribute at each step. Default = False
    cap: int (optional)
        Sequences enumerated before CapExceededError. Default = limits.chain_cap
    limits: SearchLimits (optional)

    Returns
    -------
    sequences: list of tuple of str
    """

    limits = resolve_limits(limits)
    lattice = galois_lattice(r)
    _check_maximal(lattice, chain)
    if chain.length < 1:
        raise PreconditionViolatedError("A chain of length 0 carries no release sequence")

    return _selections(r, chain, enumerate_all, limits.chain_cap if cap is None else cap)


def chain_from_iars(r: Relation, seq: Sequence[str]) -> Chain:
    """
    Chain of lattice elements visited by an informative release sequence.

    Parameters
    ----------
    r: Relation
    seq: sequence of str
        Informative release sequence

    Returns
    -------
    chain: Chain
        (ψ(κ_i), κ_i) for the closures κ_i of the prefixes, starting at the top;
        not necessarily maximal
    """

    if not is_informative(r, seq):
        raise NotInformativeError(f"Sequence {tuple(seq)} is not informative")

    lattice = galois_lattice(r)
    elements = [lattice.top]
    released = 0
    for y in seq:
        released |= 1 << r.attribute_index(y)
        gamma = r.attribute_closure_bits(released)
        elements.append(lattice.element(r.psi_bits(gamma), gamma))
    return Chain(tuple(elements))


def longest_iars(r: Relation) -> Tuple[int, ReleaseSequence]:
    """
    Longest informative release sequence of a relation.

    Its length is the length of the Galois lattice. The witness is the canonical selection
    along the first longest chain in lexicographic topological order.

    Parameters
    ----------
    r: Relation

    Returns
    -------
    length: int
    witness: tuple of str
    """

    lattice = galois_lattice(r)
    if len(lattice) == 1:
        return 0, ()

    path = nx.dag_longest_path(lattice.hasse, topo_order=lattice.topological_order())
    chain = Chain(tuple(path))
    return chain.length, _selections(r, chain, False, 1)[0]


def _longest_distances(lattice: GaloisLattice, sub: nx.DiGraph) -> dict:
    distance = {}
    for p in lattice.topological_order():
        if p not in sub:
            continue
        upper = list(sub.predecessors(p))
        distance[p] = max((distance[u] + 1 for u in upper), default=0)
    return distance


def release_profile(
    r: Relation,
    individual: str,
    cap: int = None,
    limits: SearchLimits = None,
) -> ReleaseProfile:
    """
    Longest informative release sequences identifying one individual.

    The target is the lattice element of the individual's row. Every longest chain from the
    top down to the target gives the sequences of the longest informative releases that end
    with the individual identified as far as the relation allows.

    Parameters
    ----------
    r: Relation
    individual: str
    cap: int (optional)
        Chains and sequences enumerated before CapExceededError. Default = limits.chain_cap
    limits: SearchLimits (optional)

    Returns
    -------
        ReleaseProfile
    """

    limits = resolve_limits(limits)
    cap = limits.chain_cap if cap is None else cap

    lattice = galois_lattice(r)
    i = r.individual_index(individual)
    gamma = r.rows[i]
    target = lattice.element(r.psi_bits(gamma), gamma)

    above = nx.ancestors(lattice.hasse, target) | {target}
    sub = lattice.hasse.subgraph(above)
    distance = _longest_distances(lattice, sub)

    chains = []
    stack = [[target]]
    while stack:
        path = stack.pop()
        head = path[-1]
        if head == lattice.top:
            if len(chains) >= cap:
                raise CapExceededError(f"More than {cap} longest chains", cap=cap)
            chains.append(Chain(tuple(reversed(path))))
            continue
        for u in sorted(sub.predecessors(head), key=lattice.elements.index, reverse=True):
            if distance[u] == distance[head] - 1:
                stack.append(path + [u])

    sequences = []
    for chain in chains:
        sequences.extend(_selections(r, chain, True, cap - len(sequences)))

    logger.debug("Individual %s: longest release %s via %s chains", individual, distance[target], len(chains))
    return ReleaseProfile(
        individual=individual,
        target=target,
        max_length=distance[target],
        chains=tuple(chains),
        sequences=tuple(sequences),
    )
